//! Decides halting for the comparator on a small grid of `u^n 0^m h` inputs
//! and prints which side of the `n >= 2^m - 1` threshold each one falls on.

use onestm::{build_mcc, decide_halting, well_formed_input, HaltingVerdict};

fn main() {
    let m = build_mcc();
    for zeros in 0..=3 {
        for units in 0..=8 {
            let input = well_formed_input(units, zeros);
            let verdict = decide_halting(&m, &input, 1_000_000).unwrap();
            let shown = match verdict {
                HaltingVerdict::Halts { steps } => format!("halts after {steps} steps"),
                HaltingVerdict::Diverges { reason, at_step } => {
                    format!("diverges ({reason}, seen at step {at_step})")
                }
                HaltingVerdict::Unknown { fuel_spent } => {
                    format!("unknown after {fuel_spent} steps")
                }
            };
            println!("{input:<14} n={units} m={zeros}  {shown}");
        }
    }
}
