//! The one-state machine model and its validation.
//!
//! A machine has no state register at all: the transition function maps the
//! symbol under the head directly to a symbol to write and a move. Symbols in
//! the halting set have no transition, and reading one stops the machine.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::symbol::{Move, Rule, Symbol};

/// What a validation failure is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValidationErrorKind {
    /// The blank symbol was declared as part of the input alphabet.
    BlankInInput,
    /// No blank symbol was declared, or the tape alphabet lacks it.
    BlankMissing,
    InputNotInTape,
    HaltingNotInTape,
    /// A non-halting tape symbol has no rule.
    MissingTransition,
    TransitionOnHaltingSymbol,
    WriteSymbolUnknown,
    /// A rule reads a symbol outside an explicitly declared tape alphabet.
    ReadSymbolUnknown,
    DuplicateRule,
    /// Multi-character, whitespace or control symbol, or a blank other than `_`.
    BadSymbolLiteral,
    /// A line of a machine file that is not a recognised directive.
    MalformedLine,
}

impl ValidationErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ValidationErrorKind::BlankInInput => "BlankInInput",
            ValidationErrorKind::BlankMissing => "BlankMissing",
            ValidationErrorKind::InputNotInTape => "InputNotInTape",
            ValidationErrorKind::HaltingNotInTape => "HaltingNotInTape",
            ValidationErrorKind::MissingTransition => "MissingTransition",
            ValidationErrorKind::TransitionOnHaltingSymbol => "TransitionOnHaltingSymbol",
            ValidationErrorKind::WriteSymbolUnknown => "WriteSymbolUnknown",
            ValidationErrorKind::ReadSymbolUnknown => "ReadSymbolUnknown",
            ValidationErrorKind::DuplicateRule => "DuplicateRule",
            ValidationErrorKind::BadSymbolLiteral => "BadSymbolLiteral",
            ValidationErrorKind::MalformedLine => "MalformedLine",
        }
    }
}

/// One violated constraint, with the offending symbol and source line when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub kind: ValidationErrorKind,
    pub symbol: Option<String>,
    pub line: Option<usize>,
}

impl ValidationError {
    pub fn new(kind: ValidationErrorKind) -> Self {
        ValidationError {
            kind,
            symbol: None,
            line: None,
        }
    }

    fn with_symbol(
        kind: ValidationErrorKind,
        symbol: impl Into<String>,
        line: Option<usize>,
    ) -> Self {
        ValidationError {
            kind,
            symbol: Some(symbol.into()),
            line,
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        write!(f, "{}", self.kind.name())?;
        if let Some(symbol) = &self.symbol {
            write!(f, "({symbol:?})")?;
        }
        Ok(())
    }
}

/// Every error found while validating a machine. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid machine: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct ValidationErrors(pub Vec<ValidationError>);

impl ValidationErrors {
    pub fn kinds(&self) -> Vec<ValidationErrorKind> {
        self.0.iter().map(|e| e.kind).collect()
    }

    pub fn contains(&self, kind: ValidationErrorKind, symbol: Option<&str>) -> bool {
        self.0
            .iter()
            .any(|e| e.kind == kind && (symbol.is_none() || e.symbol.as_deref() == symbol))
    }
}

/// A symbol literal as written by the user, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSymbol {
    pub text: String,
    pub line: Option<usize>,
}

impl RawSymbol {
    pub fn new(text: impl Into<String>) -> Self {
        RawSymbol {
            text: text.into(),
            line: None,
        }
    }

    pub fn at_line(text: impl Into<String>, line: usize) -> Self {
        RawSymbol {
            text: text.into(),
            line: Some(line),
        }
    }
}

impl From<char> for RawSymbol {
    fn from(c: char) -> Self {
        RawSymbol::new(c.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRule {
    pub read: RawSymbol,
    pub write: RawSymbol,
    pub movement: Move,
    pub line: Option<usize>,
}

/// An unchecked machine description, as assembled by a parser or by hand.
///
/// When `tape` is `None` the tape alphabet is inferred as the union of the
/// blank, the input alphabet, the halting set and every symbol used by a rule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawMachine {
    pub blank: Option<RawSymbol>,
    pub tape: Option<Vec<RawSymbol>>,
    pub input: Vec<RawSymbol>,
    pub halting: Vec<RawSymbol>,
    pub rules: Vec<RawRule>,
    /// Errors found before validation proper (file syntax).
    pub syntax_errors: Vec<ValidationError>,
}

impl RawMachine {
    /// Shorthand for a description over single-character literals.
    pub fn from_chars(input: &[char], halting: &[char], rules: &[(char, char, Move)]) -> Self {
        RawMachine {
            blank: Some(RawSymbol::from('_')),
            tape: None,
            input: input.iter().copied().map(RawSymbol::from).collect(),
            halting: halting.iter().copied().map(RawSymbol::from).collect(),
            rules: rules
                .iter()
                .map(|&(read, write, movement)| RawRule {
                    read: read.into(),
                    write: write.into(),
                    movement,
                    line: None,
                })
                .collect(),
            syntax_errors: Vec::new(),
        }
    }
}

/// What the machine does when its head reads a given symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Halt,
    Apply(Rule),
    /// The symbol is not in the tape alphabet.
    Unknown,
}

#[derive(Debug, Clone)]
struct ActionTable {
    ascii: [Action; 128],
    other: HashMap<Symbol, Action>,
}

impl ActionTable {
    fn new() -> Self {
        ActionTable {
            ascii: [Action::Unknown; 128],
            other: HashMap::new(),
        }
    }

    fn insert(&mut self, symbol: Symbol, action: Action) {
        let c = symbol.as_char() as usize;
        if c < 128 {
            self.ascii[c] = action;
        } else {
            self.other.insert(symbol, action);
        }
    }

    #[inline]
    fn get(&self, symbol: Symbol) -> Action {
        let c = symbol.as_char() as usize;
        if c < 128 {
            self.ascii[c]
        } else {
            self.other.get(&symbol).copied().unwrap_or(Action::Unknown)
        }
    }
}

/// A validated one-state Turing machine.
///
/// Input alphabet, halting set and rules keep their declaration order, which
/// is what serialization reproduces. The tape alphabet is a set.
#[derive(Debug, Clone)]
pub struct OneStateMachine {
    input: Vec<Symbol>,
    halting: Vec<Symbol>,
    tape: BTreeSet<Symbol>,
    rules: Vec<(Symbol, Rule)>,
    table: ActionTable,
}

impl PartialEq for OneStateMachine {
    fn eq(&self, other: &Self) -> bool {
        self.input == other.input
            && self.halting == other.halting
            && self.tape == other.tape
            && self.rules == other.rules
    }
}

impl Eq for OneStateMachine {}

impl OneStateMachine {
    /// Convenience constructor over single-character literals.
    pub fn from_chars(
        input: &[char],
        halting: &[char],
        rules: &[(char, char, Move)],
    ) -> Result<Self, ValidationErrors> {
        validate(&RawMachine::from_chars(input, halting, rules))
    }

    pub fn blank(&self) -> Symbol {
        Symbol::BLANK
    }

    pub fn input_alphabet(&self) -> &[Symbol] {
        &self.input
    }

    pub fn halting(&self) -> &[Symbol] {
        &self.halting
    }

    pub fn tape_alphabet(&self) -> &BTreeSet<Symbol> {
        &self.tape
    }

    /// Rules in declaration order.
    pub fn rules(&self) -> &[(Symbol, Rule)] {
        &self.rules
    }

    #[inline]
    pub fn action(&self, symbol: Symbol) -> Action {
        self.table.get(symbol)
    }

    pub fn rule(&self, symbol: Symbol) -> Option<Rule> {
        match self.action(symbol) {
            Action::Apply(rule) => Some(rule),
            _ => None,
        }
    }

    pub fn is_halting(&self, symbol: Symbol) -> bool {
        self.action(symbol) == Action::Halt
    }

    pub fn accepts_input_symbol(&self, symbol: Symbol) -> bool {
        self.input.contains(&symbol)
    }
}

fn check_symbol(raw: &RawSymbol, errors: &mut Vec<ValidationError>) -> Option<Symbol> {
    let mut chars = raw.text.chars();
    let symbol = match (chars.next(), chars.next()) {
        (Some(c), None) => Symbol::new(c),
        _ => None,
    };
    if symbol.is_none() {
        errors.push(ValidationError::with_symbol(
            ValidationErrorKind::BadSymbolLiteral,
            raw.text.clone(),
            raw.line,
        ));
    }
    symbol
}

fn push_unique(list: &mut Vec<Symbol>, symbol: Symbol) {
    if !list.contains(&symbol) {
        list.push(symbol);
    }
}

/// Checks every machine invariant, accumulating all violations.
pub fn validate(raw: &RawMachine) -> Result<OneStateMachine, ValidationErrors> {
    use ValidationErrorKind as K;

    let mut errors = raw.syntax_errors.clone();

    match &raw.blank {
        None => errors.push(ValidationError::new(K::BlankMissing)),
        Some(b) => {
            if let Some(s) = check_symbol(b, &mut errors) {
                if !s.is_blank() {
                    errors.push(ValidationError::with_symbol(
                        K::BadSymbolLiteral,
                        b.text.clone(),
                        b.line,
                    ));
                }
            }
        }
    }

    let mut input = Vec::new();
    for raw_sym in &raw.input {
        if let Some(s) = check_symbol(raw_sym, &mut errors) {
            if s.is_blank() {
                errors.push(ValidationError::with_symbol(
                    K::BlankInInput,
                    "_",
                    raw_sym.line,
                ));
            } else {
                push_unique(&mut input, s);
            }
        }
    }

    let mut halting = Vec::new();
    for raw_sym in &raw.halting {
        if let Some(s) = check_symbol(raw_sym, &mut errors) {
            push_unique(&mut halting, s);
        }
    }

    let mut rules: Vec<(Symbol, Rule)> = Vec::new();
    let mut rule_lines: Vec<Option<usize>> = Vec::new();
    // Reads with a rule, even one whose write literal is bad.
    let mut covered: Vec<Symbol> = Vec::new();
    for raw_rule in &raw.rules {
        let read = check_symbol(&raw_rule.read, &mut errors);
        let write = check_symbol(&raw_rule.write, &mut errors);
        let Some(read) = read else {
            continue;
        };
        if covered.contains(&read) {
            errors.push(ValidationError::with_symbol(
                K::DuplicateRule,
                read.to_string(),
                raw_rule.line,
            ));
            continue;
        }
        covered.push(read);
        if let Some(write) = write {
            rules.push((read, Rule::new(write, raw_rule.movement)));
            rule_lines.push(raw_rule.line);
        }
    }

    let tape: BTreeSet<Symbol> = match &raw.tape {
        Some(declared) => {
            let tape: BTreeSet<Symbol> = declared
                .iter()
                .filter_map(|s| check_symbol(s, &mut errors))
                .collect();
            if !tape.contains(&Symbol::BLANK) && raw.blank.is_some() {
                errors.push(ValidationError::with_symbol(K::BlankMissing, "_", None));
            }
            for (s, raw_sym) in input.iter().zip(&raw.input) {
                if !tape.contains(s) {
                    errors.push(ValidationError::with_symbol(
                        K::InputNotInTape,
                        s.to_string(),
                        raw_sym.line,
                    ));
                }
            }
            for s in &halting {
                if !tape.contains(s) {
                    errors.push(ValidationError::with_symbol(
                        K::HaltingNotInTape,
                        s.to_string(),
                        None,
                    ));
                }
            }
            for ((read, rule), line) in rules.iter().zip(&rule_lines) {
                if !tape.contains(read) {
                    errors.push(ValidationError::with_symbol(
                        K::ReadSymbolUnknown,
                        read.to_string(),
                        *line,
                    ));
                }
                if !tape.contains(&rule.write) {
                    errors.push(ValidationError::with_symbol(
                        K::WriteSymbolUnknown,
                        rule.write.to_string(),
                        *line,
                    ));
                }
            }
            tape
        }
        None => {
            let mut tape = BTreeSet::new();
            tape.insert(Symbol::BLANK);
            tape.extend(input.iter().copied());
            tape.extend(halting.iter().copied());
            tape.extend(covered.iter().copied());
            tape.extend(rules.iter().map(|(_, rule)| rule.write));
            tape
        }
    };

    let halting_set: HashSet<Symbol> = halting.iter().copied().collect();
    for ((read, _), line) in rules.iter().zip(&rule_lines) {
        if halting_set.contains(read) {
            errors.push(ValidationError::with_symbol(
                K::TransitionOnHaltingSymbol,
                read.to_string(),
                *line,
            ));
        }
    }
    for s in &tape {
        if !halting_set.contains(s) && !covered.contains(s) {
            errors.push(ValidationError::with_symbol(
                K::MissingTransition,
                s.to_string(),
                None,
            ));
        }
    }

    if !errors.is_empty() {
        return Err(ValidationErrors(errors));
    }

    let mut table = ActionTable::new();
    for (read, rule) in &rules {
        table.insert(*read, Action::Apply(*rule));
    }
    for s in &halting {
        table.insert(*s, Action::Halt);
    }

    Ok(OneStateMachine {
        input,
        halting,
        tape,
        rules,
        table,
    })
}
