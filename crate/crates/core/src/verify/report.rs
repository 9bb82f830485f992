use std::fmt::Write as _;
use std::time::Duration;

/// How unknown (undecided) cases affect whether a report holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownPolicy {
    /// Any unknown case makes the report fail.
    Strict,
    /// Unknown cases are counted and listed but do not affect the status.
    Informational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Holds,
    /// At least one case contradicts the claim.
    CounterexampleFound,
    /// No counterexample, but unknown cases violate a strict policy.
    Undecided,
}

impl ReportStatus {
    pub fn name(self) -> &'static str {
        match self {
            ReportStatus::Holds => "HOLDS",
            ReportStatus::CounterexampleFound => "COUNTEREXAMPLE",
            ReportStatus::Undecided => "UNDECIDED",
        }
    }
}

/// A failing or undecided case, with what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseOutcome {
    Pass,
    Fail(String),
    Unknown(String),
}

/// Ordered per-case results. Merging concatenates, so it is associative and
/// preserves case order however the work was split.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: u64,
    pub passes: u64,
    pub failures: Vec<Witness>,
    pub unknowns: Vec<Witness>,
}

impl Tally {
    pub fn single(case: impl Into<String>, outcome: CaseOutcome) -> Self {
        let mut tally = Tally {
            total: 1,
            ..Tally::default()
        };
        match outcome {
            CaseOutcome::Pass => tally.passes = 1,
            CaseOutcome::Fail(detail) => tally.failures.push(Witness {
                case: case.into(),
                detail,
            }),
            CaseOutcome::Unknown(detail) => tally.unknowns.push(Witness {
                case: case.into(),
                detail,
            }),
        }
        tally
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.passes += other.passes;
        self.failures.extend(other.failures);
        self.unknowns.extend(other.unknowns);
        self
    }
}

/// Evidence for one claim checked over a finite grid of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checker: String,
    pub parameters: Vec<(String, String)>,
    pub tally: Tally,
    pub policy: UnknownPolicy,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        checker: &str,
        parameters: Vec<(&str, String)>,
        tally: Tally,
        policy: UnknownPolicy,
        elapsed: Duration,
    ) -> Self {
        debug_assert_eq!(
            tally.passes + tally.failures.len() as u64 + tally.unknowns.len() as u64,
            tally.total
        );
        VerificationReport {
            checker: checker.to_string(),
            parameters: parameters
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            tally,
            policy,
            elapsed,
        }
    }

    pub fn total(&self) -> u64 {
        self.tally.total
    }

    pub fn passes(&self) -> u64 {
        self.tally.passes
    }

    pub fn failures(&self) -> &[Witness] {
        &self.tally.failures
    }

    pub fn unknowns(&self) -> &[Witness] {
        &self.tally.unknowns
    }

    pub fn status(&self) -> ReportStatus {
        if !self.tally.failures.is_empty() {
            ReportStatus::CounterexampleFound
        } else if self.policy == UnknownPolicy::Strict && !self.tally.unknowns.is_empty() {
            ReportStatus::Undecided
        } else {
            ReportStatus::Holds
        }
    }

    pub fn holds(&self) -> bool {
        self.status() == ReportStatus::Holds
    }

    /// Line-oriented summary, followed by `begin failures` / `begin unknowns`
    /// blocks listing each witness as `case | detail`. Timing is left out so
    /// the text is reproducible.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "checker: {}", self.checker);
        let _ = writeln!(out, "parameters: {params}");
        let _ = writeln!(out, "cases: {}", self.tally.total);
        let _ = writeln!(out, "passes: {}", self.tally.passes);
        let _ = writeln!(out, "failures: {}", self.tally.failures.len());
        let policy = match self.policy {
            UnknownPolicy::Strict => "strict",
            UnknownPolicy::Informational => "informational",
        };
        let _ = writeln!(out, "unknowns: {} ({policy})", self.tally.unknowns.len());
        let _ = writeln!(out, "status: {}", self.status().name());
        for (label, list) in [
            ("failures", &self.tally.failures),
            ("unknowns", &self.tally.unknowns),
        ] {
            if list.is_empty() {
                continue;
            }
            let _ = writeln!(out, "begin {label}");
            for w in list {
                let _ = writeln!(out, "{} | {}", w.case, w.detail);
            }
            let _ = writeln!(out, "end {label}");
        }
        out
    }
}
