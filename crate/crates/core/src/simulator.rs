//! Step-exact execution, fuel-bounded runs and trace rendering.

use std::fmt;

use thiserror::Error;

use crate::halting::{DetectorSet, DivergenceMonitor, DivergenceReason};
use crate::machine::{Action, OneStateMachine};
use crate::symbol::Symbol;
use crate::tape::Tape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("input symbol {symbol:?} at position {position} is not in the input alphabet")]
    InputSymbolNotInAlphabet { symbol: char, position: usize },
    #[error("configuration has already halted")]
    SteppingHaltedConfiguration,
    #[error("symbol {0:?} under the head is not in the machine's tape alphabet")]
    ForeignSymbol(char),
}

/// Where the head sits relative to the tight interval of the tape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeadOffset {
    /// The tape is entirely blank; the head position carries no information.
    EmptyTape,
    /// Offset from the left end of the interval.
    Inside(u64),
    /// Distance to the left of the interval.
    LeftOf(u64),
    /// Distance to the right of the interval.
    RightOf(u64),
}

/// The complete runtime state of a one-state machine.
#[derive(Debug, Clone)]
pub struct Configuration {
    tape: Tape,
    head: i64,
    steps: u64,
    // input placement plus every cell the head has visited
    extent: (i64, i64),
    halted: bool,
}

impl Configuration {
    pub fn tape(&self) -> &Tape {
        &self.tape
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Symbol under the head.
    #[inline]
    pub fn read(&self) -> Symbol {
        self.tape.get(self.head)
    }

    /// Smallest interval covering the input placement and every visited cell.
    pub fn visited_extent(&self) -> (i64, i64) {
        self.extent
    }

    /// Cells shown by [`render`]: the visited extent plus one blank on each side.
    pub fn render_window(&self) -> (i64, i64) {
        (self.extent.0 - 1, self.extent.1 + 1)
    }

    pub fn head_offset(&self) -> HeadOffset {
        match self.tape.bounds() {
            None => HeadOffset::EmptyTape,
            Some((lo, _)) if self.head < lo => HeadOffset::LeftOf((lo - self.head) as u64),
            Some((_, hi)) if self.head > hi => HeadOffset::RightOf((self.head - hi) as u64),
            Some((lo, _)) => HeadOffset::Inside((self.head - lo) as u64),
        }
    }

    /// True iff the two configurations differ only by a shift of the whole tape
    /// together with the head.
    pub fn same_up_to_translation(&self, other: &Configuration) -> bool {
        self.head_offset() == other.head_offset() && self.tape.content() == other.tape.content()
    }
}

/// Result of a single [`step`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepResult {
    /// A rule fired.
    Continue,
    /// The head is on a halting symbol; the configuration is unchanged.
    Halt,
}

/// How a bounded run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunOutcome {
    Halted {
        steps: u64,
    },
    Diverges {
        reason: DivergenceReason,
        at_step: u64,
    },
    FuelExhausted {
        fuel: u64,
    },
}

impl fmt::Display for RunOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunOutcome::Halted { steps } => write!(f, "HALTS steps={steps}"),
            RunOutcome::Diverges { reason, at_step } => {
                write!(f, "DIVERGES reason={} at={at_step}", reason.name())
            }
            RunOutcome::FuelExhausted { fuel } => write!(f, "UNKNOWN fuel={fuel}"),
        }
    }
}

/// Puts `input` on cells `0..len` with the head on cell 0.
pub fn init(m: &OneStateMachine, input: &str) -> Result<Configuration, SimError> {
    let mut symbols = Vec::with_capacity(input.len());
    for (position, c) in input.chars().enumerate() {
        match Symbol::new(c) {
            Some(s) if m.accepts_input_symbol(s) => symbols.push(s),
            _ => {
                return Err(SimError::InputSymbolNotInAlphabet {
                    symbol: c,
                    position,
                })
            }
        }
    }
    let hi = (symbols.len() as i64 - 1).max(0);
    Ok(Configuration {
        tape: Tape::from_symbols(&symbols),
        head: 0,
        steps: 0,
        extent: (0, hi),
        halted: false,
    })
}

/// Applies one transition in place.
pub fn step(m: &OneStateMachine, c: &mut Configuration) -> Result<StepResult, SimError> {
    if c.halted {
        return Err(SimError::SteppingHaltedConfiguration);
    }
    let read = c.read();
    match m.action(read) {
        Action::Halt => {
            c.halted = true;
            Ok(StepResult::Halt)
        }
        Action::Apply(rule) => {
            c.tape.set(c.head, rule.write);
            c.head += rule.movement.delta();
            c.steps += 1;
            c.extent = (c.extent.0.min(c.head), c.extent.1.max(c.head));
            Ok(StepResult::Continue)
        }
        Action::Unknown => Err(SimError::ForeignSymbol(read.as_char())),
    }
}

/// Drives a run, calling `observe` on every configuration from step 0 up to
/// and including the final one.
pub(crate) fn drive(
    m: &OneStateMachine,
    input: &str,
    fuel: u64,
    detectors: DetectorSet,
    mut observe: impl FnMut(&Configuration),
) -> Result<RunOutcome, SimError> {
    let mut c = init(m, input)?;
    let mut monitor = DivergenceMonitor::new(m, input, detectors);
    loop {
        observe(&c);
        match m.action(c.read()) {
            Action::Halt => return Ok(RunOutcome::Halted { steps: c.steps }),
            Action::Unknown => return Err(SimError::ForeignSymbol(c.read().as_char())),
            Action::Apply(_) => {}
        }
        if let Some(reason) = monitor.observe(&c) {
            return Ok(RunOutcome::Diverges {
                reason,
                at_step: c.steps,
            });
        }
        if c.steps >= fuel {
            return Ok(RunOutcome::FuelExhausted { fuel });
        }
        step(m, &mut c)?;
    }
}

/// Runs for at most `fuel` steps, stopping early when an enabled detector
/// proves divergence.
pub fn run(
    m: &OneStateMachine,
    input: &str,
    fuel: u64,
    detectors: DetectorSet,
) -> Result<RunOutcome, SimError> {
    drive(m, input, fuel, detectors, |_| {})
}

/// Renders one configuration in the textual trace format: three characters per
/// cell, the head's cell in brackets, blank as `_`, trailing spaces trimmed.
pub fn render(c: &Configuration) -> String {
    let (lo, hi) = c.render_window();
    let mut line = String::with_capacity(3 * (hi - lo + 1) as usize);
    for cell in lo..=hi {
        let s = c.tape.get(cell).as_char();
        if cell == c.head {
            line.push('[');
            line.push(s);
            line.push(']');
        } else {
            line.push(' ');
            line.push(s);
            line.push(' ');
        }
    }
    line.truncate(line.trim_end().len());
    line
}

/// A rendered run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub lines: Vec<String>,
    pub outcome: RunOutcome,
}

impl Trace {
    /// Trace lines followed by the outcome line, each newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&self.outcome.to_string());
        out.push('\n');
        out
    }
}

/// Like [`run`] with every detector enabled, also rendering each configuration.
pub fn trace(m: &OneStateMachine, input: &str, fuel: u64) -> Result<Trace, SimError> {
    let mut lines = Vec::new();
    let outcome = drive(m, input, fuel, DetectorSet::ALL, |c| lines.push(render(c)))?;
    Ok(Trace { lines, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_mcc;
    use crate::symbol::Move;

    fn sym(c: char) -> Symbol {
        Symbol::new(c).unwrap()
    }

    fn advance(m: &OneStateMachine, c: &mut Configuration, n: usize) {
        for _ in 0..n {
            assert_eq!(step(m, c).unwrap(), StepResult::Continue);
        }
    }

    #[test]
    fn init_places_input() {
        let m = build_mcc();
        let c = init(&m, "uuuu00h").unwrap();
        assert_eq!(c.tape().bounds(), Some((0, 6)));
        assert_eq!(c.head(), 0);
        assert_eq!(c.steps(), 0);
        assert_eq!(c.read(), sym('u'));
        assert_eq!(render(&c), " _ [u] u  u  u  0  0  h  _");
    }

    #[test]
    fn init_empty_input() {
        let c = init(&build_mcc(), "").unwrap();
        assert!(c.tape().is_empty());
        assert_eq!(c.head(), 0);
        assert_eq!(c.read(), Symbol::BLANK);
        assert_eq!(render(&c), " _ [_] _");
    }

    #[test]
    fn init_rejects_foreign_symbol() {
        assert_eq!(
            init(&build_mcc(), "ux").unwrap_err(),
            SimError::InputSymbolNotInAlphabet {
                symbol: 'x',
                position: 1
            }
        );
        // U is in the tape alphabet but not the input alphabet
        assert!(init(&build_mcc(), "U").is_err());
    }

    #[test]
    fn first_step_of_the_comparator() {
        let m = build_mcc();
        let mut c = init(&m, "uuuu00h").unwrap();
        advance(&m, &mut c, 1);
        assert_eq!(c.tape().get(0), sym('U'));
        assert_eq!(c.head(), 1);
        assert_eq!(c.steps(), 1);
        assert_eq!(render(&c), " _  U [u] u  u  0  0  h  _");
    }

    #[test]
    fn last_steps_reach_the_halting_symbol() {
        let m = build_mcc();
        let mut c = init(&m, "uuuu00h").unwrap();
        advance(&m, &mut c, 19);
        assert_eq!(c.head(), 5);
        assert_eq!(c.read(), sym('1'));
        advance(&m, &mut c, 1);
        assert_eq!(c.read(), sym('h'));
        assert_eq!(render(&c), " _  U  C  C  C  Z  Z [h] _");
        assert_eq!(step(&m, &mut c).unwrap(), StepResult::Halt);
        assert_eq!(c.steps(), 20);
        assert_eq!(
            step(&m, &mut c).unwrap_err(),
            SimError::SteppingHaltedConfiguration
        );
    }

    #[test]
    fn blank_rule_moves_left() {
        let m = build_mcc();
        let mut c = init(&m, "uu00h").unwrap();
        while c.head() != -1 {
            step(&m, &mut c).unwrap();
        }
        let before = c.steps();
        step(&m, &mut c).unwrap();
        assert_eq!(c.head(), -2);
        assert_eq!(c.tape().get(-1), Symbol::BLANK);
        assert_eq!(c.steps(), before + 1);
    }

    #[test]
    fn run_outcomes() {
        let m = build_mcc();
        assert_eq!(
            run(&m, "uuuu00h", 1_000_000, DetectorSet::ALL).unwrap(),
            RunOutcome::Halted { steps: 20 }
        );
        assert_eq!(
            run(&m, "h", 1_000_000, DetectorSet::ALL).unwrap(),
            RunOutcome::Halted { steps: 0 }
        );
        assert_eq!(
            run(&m, "h", 0, DetectorSet::NONE).unwrap(),
            RunOutcome::Halted { steps: 0 }
        );
        assert_eq!(
            run(&m, "uuuu00h", 19, DetectorSet::ALL).unwrap(),
            RunOutcome::FuelExhausted { fuel: 19 }
        );
        assert_eq!(
            run(&m, "uuuu00h", 20, DetectorSet::ALL).unwrap(),
            RunOutcome::Halted { steps: 20 }
        );
        assert!(matches!(
            run(&m, "uu00h", 1_000_000, DetectorSet::ALL).unwrap(),
            RunOutcome::Diverges {
                reason: DivergenceReason::BlankEscape,
                ..
            }
        ));
        assert_eq!(
            run(&m, "uu00h", 1000, DetectorSet::NONE).unwrap(),
            RunOutcome::FuelExhausted { fuel: 1000 }
        );
    }

    #[test]
    fn trace_line_counts() {
        let m = build_mcc();
        let t = trace(&m, "uuuu00h", 1_000_000).unwrap();
        assert_eq!(t.lines.len(), 21);
        assert_eq!(t.lines[9], " _  U  U  U [C] 0  1  h  _");
        assert_eq!(
            trace(&m, "h", 1_000_000).unwrap().lines,
            vec![" _ [h] _".to_string()]
        );
        let t = trace(&m, "u0h", 1_000_000).unwrap();
        let RunOutcome::Halted { steps } = t.outcome else {
            panic!("u0h must halt: {:?}", t.outcome)
        };
        assert_eq!(t.lines.len() as u64, steps + 1);
    }

    #[test]
    fn render_window_grows_with_the_head() {
        let m = OneStateMachine::from_chars(
            &['1'],
            &[],
            &[
                ('1', '1', Move::Left),
                ('_', 'x', Move::Right),
                ('x', 'x', Move::Left),
            ],
        )
        .unwrap();
        let t = trace(&m, "1", 4).unwrap();
        assert_eq!(t.outcome, RunOutcome::FuelExhausted { fuel: 4 });
        assert_eq!(
            t.lines,
            vec![
                " _ [1] _",
                " _ [_] 1  _",
                " _  x [1] _",
                " _ [x] 1  _",
                " _ [_] x  1  _"
            ]
        );
    }

    #[test]
    fn head_offsets() {
        let m = build_mcc();
        let c = init(&m, "u0h").unwrap();
        assert_eq!(c.head_offset(), HeadOffset::Inside(0));
        let e = init(&m, "").unwrap();
        assert_eq!(e.head_offset(), HeadOffset::EmptyTape);
    }
}
