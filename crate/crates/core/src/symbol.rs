//! Tape symbols, head moves and transition rules.

use std::fmt;

/// A single tape symbol.
///
/// Symbols are printable, non-whitespace characters. The character `_` is
/// reserved for the blank symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(char);

impl Symbol {
    /// The blank symbol, rendered as `_`.
    pub const BLANK: Symbol = Symbol('_');

    /// Returns `None` if `c` is whitespace or a control character.
    pub fn new(c: char) -> Option<Symbol> {
        if c.is_whitespace() || c.is_control() {
            None
        } else {
            Some(Symbol(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }

    pub fn is_blank(self) -> bool {
        self == Symbol::BLANK
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Direction of the head after a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Right,
}

impl Move {
    /// Cell offset applied to the head.
    pub fn delta(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Right => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Move::Left => 'L',
            Move::Right => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Move> {
        match c {
            'L' => Some(Move::Left),
            'R' => Some(Move::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One entry of the transition function: what to write and where to go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    pub write: Symbol,
    pub movement: Move,
}

impl Rule {
    pub fn new(write: Symbol, movement: Move) -> Self {
        Rule { write, movement }
    }
}
