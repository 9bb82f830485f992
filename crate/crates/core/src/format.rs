//! Line-oriented machine definition files.
//!
//! ```text
//! # comment
//! blank _
//! input u 0 h
//! halt h
//! rule u U R
//! ```
//!
//! `input` and `halt` may be repeated and their lists concatenate. The tape
//! alphabet is never written down; it is whatever the other lines mention.

use std::fmt::Write as _;

use crate::machine::{
    validate, OneStateMachine, RawMachine, RawRule, RawSymbol, ValidationError,
    ValidationErrorKind, ValidationErrors,
};
use crate::symbol::Move;

fn malformed(line: usize, text: &str) -> ValidationError {
    ValidationError {
        kind: ValidationErrorKind::MalformedLine,
        symbol: Some(text.to_string()),
        line: Some(line),
    }
}

/// Reads a machine definition without validating it.
pub fn parse_raw(text: &str) -> RawMachine {
    let mut raw = RawMachine::default();

    for (idx, line) in text.lines().enumerate() {
        let number = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let directive = tokens.next().unwrap_or_default();
        let args: Vec<&str> = tokens.collect();
        let sym = |t: &str| RawSymbol::at_line(t, number);

        match directive {
            "blank" => {
                if args.len() != 1 || raw.blank.is_some() {
                    raw.syntax_errors.push(malformed(number, trimmed));
                } else {
                    raw.blank = Some(sym(args[0]));
                }
            }
            "input" => raw.input.extend(args.iter().map(|t| sym(t))),
            "halt" => raw.halting.extend(args.iter().map(|t| sym(t))),
            "rule" => {
                let movement = match args.as_slice() {
                    [_, _, m] => {
                        let mut chars = m.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => Move::from_char(c),
                            _ => None,
                        }
                    }
                    _ => None,
                };
                match movement {
                    Some(movement) => raw.rules.push(RawRule {
                        read: sym(args[0]),
                        write: sym(args[1]),
                        movement,
                        line: Some(number),
                    }),
                    None => raw.syntax_errors.push(malformed(number, trimmed)),
                }
            }
            _ => raw.syntax_errors.push(malformed(number, trimmed)),
        }
    }

    raw
}

/// Parses and validates a machine definition document.
pub fn parse_machine(text: &str) -> Result<OneStateMachine, ValidationErrors> {
    validate(&parse_raw(text))
}

/// Writes the canonical form of a machine: `blank`, then `input` and `halt`
/// (each omitted when empty), then one `rule` line per rule in declaration
/// order.
pub fn serialize_machine(m: &OneStateMachine) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "blank {}", m.blank());
    let join = |syms: &[crate::Symbol]| {
        syms.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    if !m.input_alphabet().is_empty() {
        let _ = writeln!(out, "input {}", join(m.input_alphabet()));
    }
    if !m.halting().is_empty() {
        let _ = writeln!(out, "halt {}", join(m.halting()));
    }
    for (read, rule) in m.rules() {
        let _ = writeln!(out, "rule {} {} {}", read, rule.write, rule.movement);
    }
    out
}
