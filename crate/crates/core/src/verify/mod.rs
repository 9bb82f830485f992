//! Desk-scale checks of the comparator's language and of the limits of
//! one-state machines.
//!
//! Each checker walks a finite grid of cases in parallel and folds the
//! per-case results, in case order, into a [`VerificationReport`].

mod enumerate;
mod language;
mod pumping;
mod report;

pub use enumerate::{
    describe, enumerate_one_state_machines, enumeration_alphabet, machine_count, AUX_SYMBOLS,
};
pub use language::{counter_predicate, in_lcc_prime, parse_u0h, U0hShape};
pub use pumping::{
    enumerate_decompositions, find_pump_witness, pump_string, verify_lemma_notcf, Decomposition,
};
pub use report::{CaseOutcome, ReportStatus, Tally, UnknownPolicy, VerificationReport, Witness};

use std::time::Instant;

use rayon::prelude::*;

use crate::builders::{build_unary_vs_base, well_formed_input, Base};
use crate::halting::{decide_halting, HaltingVerdict};
use crate::machine::OneStateMachine;

fn classify(verdict: HaltingVerdict, expected_halt: bool) -> CaseOutcome {
    match verdict {
        HaltingVerdict::Halts { .. } if expected_halt => CaseOutcome::Pass,
        HaltingVerdict::Diverges { .. } if !expected_halt => CaseOutcome::Pass,
        HaltingVerdict::Unknown { fuel_spent } => {
            CaseOutcome::Unknown(format!("undecided after {fuel_spent} steps"))
        }
        HaltingVerdict::Halts { steps } => {
            CaseOutcome::Fail(format!("halts after {steps} steps, predicate says diverge"))
        }
        HaltingVerdict::Diverges { reason, at_step } => CaseOutcome::Fail(format!(
            "diverges ({reason}) at step {at_step}, predicate says halt"
        )),
    }
}

fn counter_grid(
    checker: &str,
    machine: &OneStateMachine,
    base: Base,
    n_max: usize,
    m_max: usize,
    fuel: u64,
) -> VerificationReport {
    let start = Instant::now();
    let cases: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=m_max).map(move |m| (n, m)))
        .collect();
    let tally = cases
        .par_iter()
        .map(|&(n, m)| {
            let input = well_formed_input(n, m);
            let expected = counter_predicate(n, m, base.get());
            let verdict = decide_halting(machine, &input, fuel)
                .expect("well-formed inputs use the input alphabet");
            Tally::single(format!("n={n} m={m}"), classify(verdict, expected))
        })
        .reduce(Tally::default, Tally::merge);
    let mut params = vec![];
    if base != Base::BINARY {
        params.push(("base", base.to_string()));
    }
    params.extend([
        ("n_max", n_max.to_string()),
        ("m_max", m_max.to_string()),
        ("fuel", fuel.to_string()),
    ]);
    VerificationReport::new(
        checker,
        params,
        tally,
        UnknownPolicy::Strict,
        start.elapsed(),
    )
}

/// Runs the comparator on every `u^n 0^m h` with `n <= n_max`, `m <= m_max`
/// and checks that it halts exactly when `n >= 2^m - 1`. Unknown verdicts
/// count against the report.
pub fn crosscheck_theorem2(n_max: usize, m_max: usize, fuel: u64) -> VerificationReport {
    counter_grid(
        "theorem2-crosscheck",
        &crate::builders::build_mcc(),
        Base::BINARY,
        n_max,
        m_max,
        fuel,
    )
}

/// The same check for the base-k comparator against `n >= k^m - 1`.
pub fn crosscheck_counter(base: Base, n_max: usize, m_max: usize, fuel: u64) -> VerificationReport {
    counter_grid(
        "counter-crosscheck",
        &build_unary_vs_base(base),
        base,
        n_max,
        m_max,
        fuel,
    )
}

/// Over every machine from [`enumerate_one_state_machines`], checks that
/// halting on `1` implies halting on `1^k` for `2 <= k <= k_max`, so no such
/// machine accepts exactly `{1}`. Unknown verdicts fail the report for
/// `gamma_size = 2` and are informational otherwise.
pub fn verify_theorem1(gamma_size: usize, fuel: u64, k_max: usize) -> VerificationReport {
    let start = Instant::now();
    let machines: Vec<OneStateMachine> = enumerate_one_state_machines(gamma_size).collect();
    let tally = machines
        .par_iter()
        .enumerate()
        .map(|(index, m)| {
            let case = format!("#{index} [{}]", describe(m));
            let decide = |k: usize| decide_halting(m, &"1".repeat(k), fuel).expect("inputs over {1}");
            let outcome = match decide(1) {
                HaltingVerdict::Diverges { .. } => CaseOutcome::Pass,
                HaltingVerdict::Unknown { fuel_spent } => {
                    CaseOutcome::Unknown(format!("input 1 undecided after {fuel_spent} steps"))
                }
                HaltingVerdict::Halts { steps } => {
                    let mut undecided = Vec::new();
                    let mut failure = None;
                    for k in 2..=k_max {
                        match decide(k) {
                            HaltingVerdict::Halts { .. } => {}
                            HaltingVerdict::Diverges { reason, at_step } => {
                                failure = Some(format!(
                                    "halts on 1 after {steps} steps but diverges on 1^{k} ({reason} at step {at_step})"
                                ));
                                break;
                            }
                            HaltingVerdict::Unknown { .. } => undecided.push(k.to_string()),
                        }
                    }
                    match failure {
                        Some(detail) => CaseOutcome::Fail(detail),
                        None if !undecided.is_empty() => {
                            CaseOutcome::Unknown(format!("1^k undecided for k in {{{}}}", undecided.join(",")))
                        }
                        None => CaseOutcome::Pass,
                    }
                }
            };
            Tally::single(case, outcome)
        })
        .reduce(Tally::default, Tally::merge);
    let policy = if gamma_size == 2 {
        UnknownPolicy::Strict
    } else {
        UnknownPolicy::Informational
    };
    VerificationReport::new(
        "theorem1-enumeration",
        vec![
            ("gamma", gamma_size.to_string()),
            ("fuel", fuel.to_string()),
            ("k_max", k_max.to_string()),
        ],
        tally,
        policy,
        start.elapsed(),
    )
}
