//! One-state Turing machines.
//!
//! A one-state machine has a single control state, so its transition function
//! reads only the symbol under the head. Some symbols are halting: reading
//! one stops the machine, and a word is accepted exactly when the machine
//! halts on it.
//!
//! The crate provides:
//!
//! * the machine model with validation and a text file format ([`machine`], [`format`]);
//! * a step-exact simulator and trace renderer ([`simulator`]);
//! * sound divergence detectors and a three-valued decider ([`halting`]);
//! * the unary-versus-binary comparator and its base-k family ([`builders`]);
//! * exhaustive checks of what these machines can and cannot accept ([`verify`]);
//! * the command-line front end ([`cli`]).
//!
//! ```
//! use onestm::{build_mcc, decide_halting, HaltingVerdict};
//!
//! let m = build_mcc();
//! assert_eq!(decide_halting(&m, "uuuu00h", 1_000).unwrap(), HaltingVerdict::Halts { steps: 20 });
//! assert!(decide_halting(&m, "uu00h", 1_000).unwrap().diverges());
//! ```

pub mod builders;
pub mod cli;
pub mod format;
pub mod halting;
pub mod machine;
pub mod simulator;
pub mod symbol;
pub mod tape;
pub mod verify;

pub use builders::{build_mcc, build_unary_vs_base, well_formed_input, Base, BaseOutOfRange};
pub use format::{parse_machine, serialize_machine};
pub use halting::{
    decide_halting, DetectorSet, DivergenceDetector, DivergenceReason, HaltingVerdict,
};
pub use machine::{
    validate, OneStateMachine, RawMachine, ValidationError, ValidationErrorKind, ValidationErrors,
};
pub use simulator::{
    init, render, run, step, trace, Configuration, RunOutcome, SimError, StepResult, Trace,
};
pub use symbol::{Move, Rule, Symbol};
pub use tape::Tape;

/// Step budget used when none is given.
pub const DEFAULT_FUEL: u64 = 10_000_000;
