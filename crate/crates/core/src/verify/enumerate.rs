//! Exhaustive enumeration of small one-state machines over input alphabet {1}.

use crate::machine::{validate, OneStateMachine, RawMachine, RawRule, RawSymbol};
use crate::symbol::Move;

/// Extra tape symbols, in the order they are added beyond `_` and `1`.
pub const AUX_SYMBOLS: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'i'];

/// The tape alphabet used for machines with `gamma_size` symbols.
pub fn enumeration_alphabet(gamma_size: usize) -> Vec<char> {
    assert!(
        (2..=AUX_SYMBOLS.len() + 2).contains(&gamma_size),
        "gamma_size must be between 2 and {}",
        AUX_SYMBOLS.len() + 2
    );
    let mut symbols = vec!['_', '1'];
    symbols.extend_from_slice(&AUX_SYMBOLS[..gamma_size - 2]);
    symbols
}

/// `(2g + 1)^g`.
pub fn machine_count(gamma_size: usize) -> u64 {
    ((2 * gamma_size + 1) as u64).pow(gamma_size as u32)
}

/// Builds the machine whose per-symbol choices are given in mixed radix:
/// choice 0 makes the symbol halting, choice `1 + 2j` writes symbol `j` and
/// moves left, `2 + 2j` writes symbol `j` and moves right.
fn machine_from_choices(alphabet: &[char], choices: &[usize]) -> OneStateMachine {
    let mut raw = RawMachine {
        blank: Some('_'.into()),
        tape: Some(alphabet.iter().copied().map(RawSymbol::from).collect()),
        input: vec!['1'.into()],
        ..RawMachine::default()
    };
    for (&read, &choice) in alphabet.iter().zip(choices) {
        if choice == 0 {
            raw.halting.push(read.into());
        } else {
            let j = (choice - 1) / 2;
            let movement = if (choice - 1) % 2 == 0 {
                Move::Left
            } else {
                Move::Right
            };
            raw.rules.push(RawRule {
                read: read.into(),
                write: alphabet[j].into(),
                movement,
                line: None,
            });
        }
    }
    validate(&raw).expect("enumerated machines are valid by construction")
}

/// Every machine with input alphabet `{1}` and tape alphabet
/// [`enumeration_alphabet`]`(gamma_size)`, in a fixed order. No symmetry
/// reduction: exactly [`machine_count`]`(gamma_size)` machines.
pub fn enumerate_one_state_machines(gamma_size: usize) -> impl Iterator<Item = OneStateMachine> {
    let alphabet = enumeration_alphabet(gamma_size);
    let radix = 2 * gamma_size as u64 + 1;
    (0..machine_count(gamma_size)).map(move |mut index| {
        let mut choices = vec![0usize; alphabet.len()];
        for choice in choices.iter_mut() {
            *choice = (index % radix) as usize;
            index /= radix;
        }
        machine_from_choices(&alphabet, &choices)
    })
}

/// Compact one-line description, e.g. `_:1R 1:halt`.
pub fn describe(m: &OneStateMachine) -> String {
    m.tape_alphabet()
        .iter()
        .map(|&s| match m.rule(s) {
            Some(rule) => format!("{s}:{}{}", rule.write, rule.movement),
            None => format!("{s}:halt"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}
