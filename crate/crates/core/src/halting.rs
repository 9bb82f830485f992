//! Divergence detectors and a three-valued halting decider.
//!
//! Halting of one-state machines is decidable in principle, but this module
//! does not attempt a complete procedure. It runs the machine and watches for
//! three patterns, each of which proves that the run never halts:
//!
//! * **Blank escape.** The head sits on a blank cell outside the written
//!   region and the blank rule moves it further out. The next cell is blank
//!   and outside the region too, so the same rule fires forever.
//! * **Exact cycle.** A configuration repeats up to translation. The machine
//!   has a single state, so its behaviour depends only on the tape relative to
//!   the head; a repeat means the run between the two visits repeats forever.
//! * **Translated cycle.** The head reaches a new extreme cell on one side at
//!   steps `t1 < t2`. Between the two, the head never went further inward than
//!   `w` cells past the first record, and everything outward of a record is
//!   blank. If the `w + 1` cells at the second record match those at the
//!   first, the stretch from `t2` is a shifted copy of the stretch from `t1`,
//!   ends at a new record with the same local picture, and so on forever.
//!
//! Every verdict other than [`HaltingVerdict::Unknown`] is definitive.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::machine::OneStateMachine;
use crate::simulator::{drive, init, step, Configuration, HeadOffset, RunOutcome, SimError};
use crate::symbol::{Move, Symbol};

/// Why a run is known never to halt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivergenceReason {
    BlankEscape,
    ExactCycle {
        first_seen_step: u64,
        repeat_step: u64,
    },
    TranslatedCycle {
        record_step_1: u64,
        record_step_2: u64,
        shift: i64,
    },
}

impl DivergenceReason {
    pub fn name(&self) -> &'static str {
        match self {
            DivergenceReason::BlankEscape => "blank-escape",
            DivergenceReason::ExactCycle { .. } => "exact-cycle",
            DivergenceReason::TranslatedCycle { .. } => "translated-cycle",
        }
    }

    pub fn detector(&self) -> DivergenceDetector {
        match self {
            DivergenceReason::BlankEscape => DivergenceDetector::BlankEscape,
            DivergenceReason::ExactCycle { .. } => DivergenceDetector::ExactCycle,
            DivergenceReason::TranslatedCycle { .. } => DivergenceDetector::TranslatedCycle,
        }
    }
}

impl fmt::Display for DivergenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceReason::BlankEscape => write!(f, "blank-escape"),
            DivergenceReason::ExactCycle {
                first_seen_step,
                repeat_step,
            } => write!(f, "exact-cycle({first_seen_step}->{repeat_step})"),
            DivergenceReason::TranslatedCycle {
                record_step_1,
                record_step_2,
                shift,
            } => write!(
                f,
                "translated-cycle({record_step_1}->{record_step_2}, shift {shift})"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivergenceDetector {
    BlankEscape,
    ExactCycle,
    TranslatedCycle,
}

/// Which detectors a run consults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DetectorSet {
    pub blank_escape: bool,
    pub exact_cycle: bool,
    pub translated_cycle: bool,
}

impl DetectorSet {
    pub const ALL: DetectorSet = DetectorSet {
        blank_escape: true,
        exact_cycle: true,
        translated_cycle: true,
    };
    pub const NONE: DetectorSet = DetectorSet {
        blank_escape: false,
        exact_cycle: false,
        translated_cycle: false,
    };

    pub fn only(detector: DivergenceDetector) -> Self {
        let mut set = DetectorSet::NONE;
        set.enable(detector);
        set
    }

    pub fn enable(&mut self, detector: DivergenceDetector) {
        match detector {
            DivergenceDetector::BlankEscape => self.blank_escape = true,
            DivergenceDetector::ExactCycle => self.exact_cycle = true,
            DivergenceDetector::TranslatedCycle => self.translated_cycle = true,
        }
    }

    pub fn contains(&self, detector: DivergenceDetector) -> bool {
        match detector {
            DivergenceDetector::BlankEscape => self.blank_escape,
            DivergenceDetector::ExactCycle => self.exact_cycle,
            DivergenceDetector::TranslatedCycle => self.translated_cycle,
        }
    }
}

impl FromIterator<DivergenceDetector> for DetectorSet {
    fn from_iter<I: IntoIterator<Item = DivergenceDetector>>(iter: I) -> Self {
        let mut set = DetectorSet::NONE;
        for d in iter {
            set.enable(d);
        }
        set
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaltingVerdict {
    Halts {
        steps: u64,
    },
    Diverges {
        reason: DivergenceReason,
        at_step: u64,
    },
    /// Neither halted nor proven divergent within the fuel.
    Unknown {
        fuel_spent: u64,
    },
}

impl HaltingVerdict {
    pub fn is_definitive(&self) -> bool {
        !matches!(self, HaltingVerdict::Unknown { .. })
    }

    pub fn halts(&self) -> bool {
        matches!(self, HaltingVerdict::Halts { .. })
    }

    pub fn diverges(&self) -> bool {
        matches!(self, HaltingVerdict::Diverges { .. })
    }
}

impl From<RunOutcome> for HaltingVerdict {
    fn from(outcome: RunOutcome) -> Self {
        match outcome {
            RunOutcome::Halted { steps } => HaltingVerdict::Halts { steps },
            RunOutcome::Diverges { reason, at_step } => {
                HaltingVerdict::Diverges { reason, at_step }
            }
            RunOutcome::FuelExhausted { fuel } => HaltingVerdict::Unknown { fuel_spent: fuel },
        }
    }
}

/// True iff the head is on a blank cell outside the written region and the
/// blank rule keeps moving it away (on an all-blank tape: iff the blank rule
/// is not halting).
pub fn detect_blank_escape(m: &OneStateMachine, c: &Configuration) -> bool {
    if !c.read().is_blank() {
        return false;
    }
    let Some(rule) = m.rule(Symbol::BLANK) else {
        return false;
    };
    match c.tape().bounds() {
        None => true,
        Some((lo, hi)) => {
            (c.head() < lo && rule.movement == Move::Left)
                || (c.head() > hi && rule.movement == Move::Right)
        }
    }
}

/// Translation-invariant summary of a configuration. Equal configurations
/// (up to translation) have equal fingerprints; the converse is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    content_hash: u64,
    len: u64,
    head: HeadOffset,
}

impl Fingerprint {
    pub fn of(c: &Configuration) -> Self {
        let len = c.tape().bounds().map_or(0, |(lo, hi)| (hi - lo + 1) as u64);
        Fingerprint {
            content_hash: c.tape().translation_invariant_hash(),
            len,
            head: c.head_offset(),
        }
    }
}

const DEFAULT_HISTORY_CAPACITY: usize = 1 << 20;

/// Configurations seen so far in one run, for exact-cycle detection.
///
/// Stores fingerprints only. A fingerprint hit is confirmed by asking the
/// caller to reproduce the earlier configuration and comparing in full, so a
/// hash collision can never yield a false verdict. Once `capacity`
/// fingerprints are stored, new configurations are no longer recorded and a
/// single checkpoint, refreshed at doubling step counts, takes over.
#[derive(Debug, Clone)]
pub struct CycleHistory {
    seen: HashMap<Fingerprint, u64>,
    capacity: usize,
    checkpoint: Option<(Fingerprint, u64)>,
    next_checkpoint: u64,
}

impl Default for CycleHistory {
    fn default() -> Self {
        CycleHistory::with_capacity(DEFAULT_HISTORY_CAPACITY)
    }
}

impl CycleHistory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        CycleHistory {
            seen: HashMap::new(),
            capacity,
            checkpoint: None,
            next_checkpoint: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }

    /// Records `c` and returns `(first_seen_step, repeat_step)` if it repeats
    /// an earlier configuration. `replay(s)` must return this run's
    /// configuration at step `s`.
    pub fn observe(
        &mut self,
        c: &Configuration,
        mut replay: impl FnMut(u64) -> Configuration,
    ) -> Option<(u64, u64)> {
        let fp = Fingerprint::of(c);
        if let Some(&first) = self.seen.get(&fp) {
            if replay(first).same_up_to_translation(c) {
                return Some((first, c.steps()));
            }
            return None;
        }
        if self.seen.len() < self.capacity {
            self.seen.insert(fp, c.steps());
            return None;
        }
        if let Some((saved, at)) = self.checkpoint {
            if saved == fp && replay(at).same_up_to_translation(c) {
                return Some((at, c.steps()));
            }
        }
        if c.steps() >= self.next_checkpoint {
            self.checkpoint = Some((fp, c.steps()));
            self.next_checkpoint = c.steps().max(1) * 2;
        }
        None
    }
}

/// Exact-cycle check for one configuration against a run's history.
pub fn detect_exact_cycle(
    history: &mut CycleHistory,
    c: &Configuration,
    replay: impl FnMut(u64) -> Configuration,
) -> bool {
    history.observe(c, replay).is_some()
}

#[derive(Debug, Clone)]
struct Record {
    step: u64,
    // position in side-local coordinates (outward = decreasing)
    pos: i64,
    // furthest inward head position between the previous record and this one
    segment_reach: i64,
    // cells from `pos` inward to the far end of the written region
    snapshot: Vec<Symbol>,
}

#[derive(Debug, Clone)]
struct Side {
    // +1 for the left side, -1 for the right side (mirrored)
    orientation: i64,
    extreme: i64,
    reach: i64,
    records: VecDeque<Record>,
}

impl Side {
    fn local(&self, cell: i64) -> i64 {
        self.orientation * cell
    }

    fn cell(&self, local: i64) -> i64 {
        self.orientation * local
    }

    fn snapshot(&self, c: &Configuration, pos: i64) -> Vec<Symbol> {
        let Some((lo, hi)) = c.tape().bounds() else {
            return Vec::new();
        };
        let far = if self.orientation > 0 { hi } else { -lo };
        (pos..=far).map(|y| c.tape().get(self.cell(y))).collect()
    }
}

const DEFAULT_RECORD_LIMIT: usize = 32;

/// Record-breaking snapshots for translated-cycle detection.
#[derive(Debug, Clone)]
pub struct TranslatedCycleDetector {
    sides: [Side; 2],
    record_limit: usize,
}

impl TranslatedCycleDetector {
    /// `input_len` is the length of the input placed on cells `0..input_len`.
    pub fn new(input_len: usize) -> Self {
        let side = |orientation: i64, extreme: i64| Side {
            orientation,
            extreme,
            reach: i64::MIN,
            records: VecDeque::new(),
        };
        TranslatedCycleDetector {
            sides: [
                // Step 0 is a left record: nothing left of cell 0 is written.
                side(1, 1),
                // A right record needs everything right of the head blank.
                side(-1, -(input_len as i64 - 2)),
            ],
            record_limit: DEFAULT_RECORD_LIMIT,
        }
    }

    /// Must see every configuration of the run in order.
    pub fn observe(&mut self, c: &Configuration) -> Option<DivergenceReason> {
        let mut found = None;
        for side in &mut self.sides {
            let y = side.local(c.head());
            side.reach = side.reach.max(y);
            if y >= side.extreme {
                continue;
            }
            if found.is_none() {
                let mut reach = side.reach;
                for rec in side.records.iter().rev() {
                    let width = reach - rec.pos;
                    let same = (0..=width).all(|j| {
                        let then = rec
                            .snapshot
                            .get(j as usize)
                            .copied()
                            .unwrap_or(Symbol::BLANK);
                        c.tape().get(side.cell(y + j)) == then
                    });
                    if same {
                        found = Some(DivergenceReason::TranslatedCycle {
                            record_step_1: rec.step,
                            record_step_2: c.steps(),
                            shift: side.cell(y) - side.cell(rec.pos),
                        });
                        break;
                    }
                    reach = reach.max(rec.segment_reach);
                }
            }
            let record = Record {
                step: c.steps(),
                pos: y,
                segment_reach: side.reach,
                snapshot: side.snapshot(c, y),
            };
            side.records.push_back(record);
            if side.records.len() > self.record_limit {
                side.records.pop_front();
            }
            side.extreme = y;
            side.reach = y;
        }
        found
    }
}

/// Runs all enabled detectors over the successive configurations of one run.
pub struct DivergenceMonitor<'a> {
    machine: &'a OneStateMachine,
    input: &'a str,
    detectors: DetectorSet,
    history: CycleHistory,
    translated: TranslatedCycleDetector,
}

impl<'a> DivergenceMonitor<'a> {
    pub fn new(machine: &'a OneStateMachine, input: &'a str, detectors: DetectorSet) -> Self {
        DivergenceMonitor {
            machine,
            input,
            detectors,
            history: CycleHistory::new(),
            translated: TranslatedCycleDetector::new(input.chars().count()),
        }
    }

    /// Checks, in order, blank escape, exact cycle and translated cycle.
    /// `c` must not be on a halting symbol.
    pub fn observe(&mut self, c: &Configuration) -> Option<DivergenceReason> {
        if self.detectors.blank_escape && detect_blank_escape(self.machine, c) {
            return Some(DivergenceReason::BlankEscape);
        }
        if self.detectors.exact_cycle {
            let (m, input) = (self.machine, self.input);
            let replay = |target: u64| {
                let mut r = init(m, input).expect("input was accepted once");
                while r.steps() < target {
                    step(m, &mut r).expect("replayed run stepped before");
                }
                r
            };
            if let Some((first_seen_step, repeat_step)) = self.history.observe(c, replay) {
                return Some(DivergenceReason::ExactCycle {
                    first_seen_step,
                    repeat_step,
                });
            }
        }
        if self.detectors.translated_cycle {
            if let Some(reason) = self.translated.observe(c) {
                return Some(reason);
            }
        }
        None
    }
}

/// Runs with every detector enabled.
pub fn decide_halting(
    m: &OneStateMachine,
    input: &str,
    fuel: u64,
) -> Result<HaltingVerdict, SimError> {
    drive(m, input, fuel, DetectorSet::ALL, |_| {}).map(HaltingVerdict::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_mcc, well_formed_input};
    use crate::simulator::{run, StepResult};
    use crate::symbol::Move::{Left as L, Right as R};

    fn machine(input: &[char], halting: &[char], rules: &[(char, char, Move)]) -> OneStateMachine {
        OneStateMachine::from_chars(input, halting, rules).unwrap()
    }

    fn at_step(m: &OneStateMachine, input: &str, n: u64) -> Configuration {
        let mut c = init(m, input).unwrap();
        while c.steps() < n {
            step(m, &mut c).unwrap();
        }
        c
    }

    #[test]
    fn blank_escape_on_the_left() {
        let m = build_mcc();
        let mut c = init(&m, "uu00h").unwrap();
        while c.head() != -1 {
            assert!(!detect_blank_escape(&m, &c));
            step(&m, &mut c).unwrap();
        }
        assert!(detect_blank_escape(&m, &c));
        step(&m, &mut c).unwrap();
        assert!(detect_blank_escape(&m, &c));
    }

    #[test]
    fn blank_escape_needs_outward_move() {
        let m = machine(&['1'], &[], &[('1', '1', L), ('_', 'x', R), ('x', 'x', L)]);
        let c = at_step(&m, "1", 1);
        assert_eq!(c.head(), -1);
        assert!(!detect_blank_escape(&m, &c));
    }

    #[test]
    fn blank_escape_inside_region_is_false() {
        let m = machine(&['a'], &[], &[('a', '_', R), ('_', '_', L)]);
        let mut c = init(&m, "aaa").unwrap();
        step(&m, &mut c).unwrap();
        // cell 0 is blank now, head on cell 1 which is 'a'
        assert!(!detect_blank_escape(&m, &c));
        let m2 = machine(
            &['a', 'b'],
            &[],
            &[('a', '_', R), ('b', 'b', L), ('_', '_', R)],
        );
        let mut c = init(&m2, "aab").unwrap();
        step(&m2, &mut c).unwrap();
        step(&m2, &mut c).unwrap();
        step(&m2, &mut c).unwrap();
        // Only "b" at cell 2 is left. The head is on the blank cell 1 but
        // the blank rule moves it back towards the written region.
        assert_eq!(c.tape().bounds(), Some((2, 2)));
        assert_eq!(c.head(), 1);
        assert!(!detect_blank_escape(&m2, &c));
    }

    #[test]
    fn blank_escape_on_empty_tape() {
        let m = machine(&['1'], &[], &[('1', '1', R), ('_', '_', R)]);
        let c = init(&m, "").unwrap();
        assert!(detect_blank_escape(&m, &c));
        let halting_blank = machine(&['1'], &['_'], &[('1', '1', R)]);
        assert!(!detect_blank_escape(
            &halting_blank,
            &init(&halting_blank, "").unwrap()
        ));
    }

    #[test]
    fn oscillation_is_an_exact_cycle() {
        // 1 -> L onto blank, blank -> R back onto 1, forever.
        let m = machine(&['1'], &[], &[('1', '1', L), ('_', '_', R)]);
        let only_exact = DetectorSet::only(DivergenceDetector::ExactCycle);
        let outcome = run(&m, "1", 100, only_exact).unwrap();
        assert_eq!(
            outcome,
            RunOutcome::Diverges {
                reason: DivergenceReason::ExactCycle {
                    first_seen_step: 0,
                    repeat_step: 2
                },
                at_step: 2
            }
        );
    }

    #[test]
    fn exact_cycle_is_quiet_before_a_halt() {
        let m = build_mcc();
        let outcome = run(
            &m,
            "uuuu00h",
            1000,
            DetectorSet::only(DivergenceDetector::ExactCycle),
        )
        .unwrap();
        assert_eq!(outcome, RunOutcome::Halted { steps: 20 });
    }

    #[test]
    fn fresh_history_never_fires() {
        let m = build_mcc();
        let c = init(&m, "u0h").unwrap();
        let mut history = CycleHistory::new();
        assert!(history.is_empty());
        assert!(!detect_exact_cycle(&mut history, &c, |_| unreachable!()));
        assert_eq!(history.len(), 1);
    }

    #[test]
    fn fingerprint_collision_is_not_a_cycle() {
        let m = build_mcc();
        let c = init(&m, "u0h").unwrap();
        let other = init(&m, "uuh").unwrap();
        let mut history = CycleHistory::new();
        history.observe(&c, |_| unreachable!());
        // Pretend `other` collided with step 0 by replaying a different configuration.
        let mut forged = CycleHistory::new();
        forged.seen.insert(Fingerprint::of(&other), 0);
        assert_eq!(forged.observe(&other, |_| c.clone()), None);
    }

    #[test]
    fn checkpoint_takes_over_when_history_is_full() {
        let m = machine(&['1'], &[], &[('1', '1', L), ('_', '_', R)]);
        let mut history = CycleHistory::with_capacity(0);
        let mut c = init(&m, "1").unwrap();
        let mut found = None;
        for _ in 0..20 {
            found = history.observe(&c, |s| at_step(&m, "1", s));
            if found.is_some() {
                break;
            }
            step(&m, &mut c).unwrap();
        }
        let (first, repeat) = found.expect("checkpoint detects the oscillation");
        assert!(at_step(&m, "1", first).same_up_to_translation(&at_step(&m, "1", repeat)));
    }

    #[test]
    fn leftward_growth_is_a_translated_cycle() {
        let m = machine(&['1'], &[], &[('_', '1', R), ('1', '1', L)]);
        let only = DetectorSet::only(DivergenceDetector::TranslatedCycle);
        let outcome = run(&m, "1", 10_000, only).unwrap();
        let RunOutcome::Diverges {
            reason:
                DivergenceReason::TranslatedCycle {
                    record_step_1,
                    record_step_2,
                    shift,
                },
            at_step,
        } = outcome
        else {
            panic!("expected a translated cycle, got {outcome:?}");
        };
        assert_eq!(
            (record_step_1, record_step_2, shift, at_step),
            (1, 4, -1, 4)
        );
        // no exact repetition: the tape keeps growing
        assert_eq!(
            run(
                &m,
                "1",
                10_000,
                DetectorSet::only(DivergenceDetector::ExactCycle)
            )
            .unwrap(),
            RunOutcome::FuelExhausted { fuel: 10_000 }
        );
        assert_eq!(
            run(&m, "1", 100_000, DetectorSet::NONE).unwrap(),
            RunOutcome::FuelExhausted { fuel: 100_000 }
        );
    }

    #[test]
    fn rightward_growth_is_a_translated_cycle() {
        let m = machine(&['1'], &[], &[('_', '1', L), ('1', '1', R)]);
        let outcome = run(
            &m,
            "11",
            10_000,
            DetectorSet::only(DivergenceDetector::TranslatedCycle),
        )
        .unwrap();
        assert!(
            matches!(
                outcome,
                RunOutcome::Diverges {
                    reason: DivergenceReason::TranslatedCycle { shift, .. },
                    ..
                } if shift > 0
            ),
            "{outcome:?}"
        );
    }

    #[test]
    fn translated_cycle_is_quiet_on_halting_comparator_runs() {
        let m = build_mcc();
        let only = DetectorSet::only(DivergenceDetector::TranslatedCycle);
        for mm in 0..=4u32 {
            let n = (1usize << mm) - 1;
            for extra in 0..3 {
                let x = well_formed_input(n + extra, mm as usize);
                let outcome = run(&m, &x, 1_000_000, only).unwrap();
                assert!(
                    matches!(outcome, RunOutcome::Halted { .. }),
                    "{x}: {outcome:?}"
                );
            }
        }
    }

    #[test]
    fn fresh_translated_detector_is_quiet() {
        let m = build_mcc();
        let mut det = TranslatedCycleDetector::new(3);
        assert_eq!(det.observe(&init(&m, "u0h").unwrap()), None);
    }

    #[test]
    fn decide_comparator_examples() {
        let m = build_mcc();
        assert_eq!(
            decide_halting(&m, "uuuu00h", 1_000_000).unwrap(),
            HaltingVerdict::Halts { steps: 20 }
        );
        assert!(decide_halting(&m, "uuu00h", 1_000_000).unwrap().halts());
        assert!(matches!(
            decide_halting(&m, "uu00h", 1_000_000).unwrap(),
            HaltingVerdict::Diverges {
                reason: DivergenceReason::BlankEscape,
                ..
            }
        ));
        assert!(decide_halting(&m, "uux", 10).is_err());
    }

    #[test]
    fn step_agrees_with_halting_check() {
        let m = build_mcc();
        let mut c = at_step(&m, "h", 0);
        assert_eq!(step(&m, &mut c).unwrap(), StepResult::Halt);
    }
}
