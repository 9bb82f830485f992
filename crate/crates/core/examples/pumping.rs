//! Walks every pumping-lemma split of `u^(2^p - 1) 0^p h` and shows a
//! pumping exponent that leaves the comparator's language for a few of them,
//! then prints the full report.

use onestm::verify::{
    enumerate_decompositions, find_pump_witness, pump_string, verify_lemma_notcf,
};

fn main() {
    let p = 3;
    let s = pump_string(p);
    println!("string: {s}");
    for d in enumerate_decompositions(&s, p).step_by(25) {
        let n = find_pump_witness(&d, 8).expect("every split has a witness");
        println!(
            "r={:?} v={:?} w={:?} x={:?} y={:?}  pumped {n} times: {}",
            d.r,
            d.v,
            d.w,
            d.x,
            d.y,
            d.pumped(n)
        );
    }
    println!();
    print!("{}", verify_lemma_notcf(p, 8).summary());
}
