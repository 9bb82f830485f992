//! Prints the comparator's full computation on `uuuu00h`, one configuration
//! per line, followed by the verdict.
//!
//! Run with `cargo run --example figure_trace -- [input]`.

use onestm::{build_mcc, trace};

fn main() {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "uuuu00h".to_string());
    match trace(&build_mcc(), &input, 10_000) {
        Ok(t) => print!("{}", t.to_text()),
        Err(e) => eprintln!("error: {e}"),
    }
}
