//! Enumerates every one-state machine with input alphabet {1} over two and
//! three tape symbols and checks that none halts on `1` alone.

use onestm::verify::{enumerate_one_state_machines, verify_theorem1};
use onestm::{decide_halting, HaltingVerdict};

fn main() {
    let accepting_one: Vec<_> = enumerate_one_state_machines(2)
        .filter(|m| {
            matches!(
                decide_halting(m, "1", 1_000).unwrap(),
                HaltingVerdict::Halts { .. }
            )
        })
        .collect();
    println!(
        "{} of 25 two-symbol machines halt on 1; each also halts on 11:",
        accepting_one.len()
    );
    for m in &accepting_one {
        let two = decide_halting(m, "11", 1_000).unwrap();
        println!("  {:<16} 11 -> {two:?}", onestm::verify::describe(m));
    }
    println!();
    for gamma in [2, 3] {
        print!("{}", verify_theorem1(gamma, 100_000, 3).summary());
        println!();
    }
}
