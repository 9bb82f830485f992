//! Parses a machine written in the text format, reports validation errors
//! for a broken variant, and runs the valid one.

use onestm::{parse_machine, run, serialize_machine, DetectorSet};

const ERASER: &str = "\
# Erases a block of 1s from the left and halts on the end marker.
blank _
input 1 e
halt e
rule 1 _ R
rule _ _ R
";

const BROKEN: &str = "\
blank _
input 1 e
rule 1 x R
rule 1 _ L
rule _ _ Q
";

fn main() {
    let m = parse_machine(ERASER).expect("the example machine is valid");
    print!("{}", serialize_machine(&m));
    for input in ["e", "111e", "1111111e"] {
        println!(
            "{input:<10} {}",
            run(&m, input, 1_000, DetectorSet::ALL).unwrap()
        );
    }
    println!();
    match parse_machine(BROKEN) {
        Ok(_) => println!("unexpectedly valid"),
        Err(errors) => {
            for e in &errors.0 {
                println!("{e}");
            }
        }
    }
}
