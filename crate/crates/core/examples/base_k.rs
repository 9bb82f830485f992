//! Builds the unary-versus-base-k comparator, prints its machine file, and
//! shows that it halts exactly from `n = k^m - 1` onwards.
//!
//! Run with `cargo run --example base_k -- 3`.

use onestm::{build_unary_vs_base, decide_halting, serialize_machine, well_formed_input, Base};

fn main() {
    let k: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let base = match Base::new(k) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    };
    let m = build_unary_vs_base(base);
    print!("{}", serialize_machine(&m));
    println!();
    for digits in 1..=2u32 {
        let threshold = (k.pow(digits) - 1) as usize;
        for n in threshold.saturating_sub(1)..=threshold {
            let input = well_formed_input(n, digits as usize);
            let verdict = decide_halting(&m, &input, 10_000_000).unwrap();
            println!("n={n:<3} m={digits}  {verdict:?}");
        }
    }
}
