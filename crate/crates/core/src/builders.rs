//! The unary-versus-binary comparator machine, its base-k generalization and
//! well-formed inputs for them.
//!
//! On input `u^n 0^m h` the machine marks `u`s as a unary counter on the left
//! and treats the digits as a counter in base k on the right (least
//! significant digit first). Each increment of one counter bounces the head to
//! the other. The head reaches `h` only if the unary side holds out for the
//! `k^m - 1` increments that saturate the digit side; otherwise it falls off
//! the left end onto blanks and walks left forever.

use std::fmt;

use thiserror::Error;

use crate::machine::{validate, OneStateMachine, RawMachine};
use crate::symbol::Move::{Left as L, Right as R};

/// Radix of the digit counter, between 2 and 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("base {0} is out of range (expected 2..=10)")]
pub struct BaseOutOfRange(pub u32);

impl Base {
    pub const BINARY: Base = Base(2);

    pub fn new(k: u32) -> Result<Self, BaseOutOfRange> {
        if (2..=10).contains(&k) {
            Ok(Base(k))
        } else {
            Err(BaseOutOfRange(k))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn digit(self, d: u32) -> char {
        debug_assert!(d < self.0);
        char::from_digit(d, 10).expect("digit below ten")
    }
}

impl TryFrom<u32> for Base {
    type Error = BaseOutOfRange;

    fn try_from(k: u32) -> Result<Self, Self::Error> {
        Base::new(k)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The comparator over Σ = {u, 0, h} with its nine-symbol tape alphabet.
pub fn build_mcc() -> OneStateMachine {
    OneStateMachine::from_chars(
        &['u', '0', 'h'],
        &['h'],
        &[
            ('u', 'U', R),
            ('0', '1', L),
            ('U', 'C', R),
            ('1', 'Z', R),
            ('Z', '0', L),
            ('C', 'B', L),
            ('B', 'C', R),
            ('_', '_', L),
        ],
    )
    .expect("comparator table is valid")
}

/// Unary versus base-k comparator. Digit `d < k-1` increments and bounces
/// left; digit `k-1` becomes the carry marker `Z` and moves right. Rules are
/// declared in the same order as [`build_mcc`], so base 2 yields an identical
/// machine.
pub fn build_unary_vs_base(base: Base) -> OneStateMachine {
    let top = base.get() - 1;
    let mut rules = vec![('u', 'U', R)];
    for d in 0..top {
        rules.push((base.digit(d), base.digit(d + 1), L));
    }
    rules.push(('U', 'C', R));
    rules.push((base.digit(top), 'Z', R));
    rules.extend([('Z', '0', L), ('C', 'B', L), ('B', 'C', R), ('_', '_', L)]);
    validate(&RawMachine::from_chars(&['u', '0', 'h'], &['h'], &rules))
        .expect("comparator schema is valid")
}

/// `u^n 0^m h`.
pub fn well_formed_input(n: usize, m: usize) -> String {
    let mut s = String::with_capacity(n + m + 1);
    s.extend(std::iter::repeat_n('u', n));
    s.extend(std::iter::repeat_n('0', m));
    s.push('h');
    s
}
