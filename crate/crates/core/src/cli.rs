//! Command-line front end.
//!
//! Commands return their output instead of printing it, so the binary stays a
//! thin wrapper and tests can call [`run_cli`] directly.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::builders::{build_mcc, build_unary_vs_base, Base};
use crate::format::{parse_machine, serialize_machine};
use crate::machine::OneStateMachine;
use crate::simulator::{run, trace, RunOutcome};
use crate::verify::{
    crosscheck_theorem2, verify_lemma_notcf, verify_theorem1, ReportStatus, VerificationReport,
};
use crate::{DetectorSet, DEFAULT_FUEL};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    /// Halted, or the verification holds.
    Success = 0,
    Diverges = 1,
    /// Fuel exhausted, or unknown cases under a strict policy.
    Unknown = 2,
    UsageError = 3,
    VerificationFailure = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of_outcome(outcome: &RunOutcome) -> Self {
        match outcome {
            RunOutcome::Halted { .. } => ExitCode::Success,
            RunOutcome::Diverges { .. } => ExitCode::Diverges,
            RunOutcome::FuelExhausted { .. } => ExitCode::Unknown,
        }
    }

    pub fn of_report(report: &VerificationReport) -> Self {
        match report.status() {
            ReportStatus::Holds => ExitCode::Success,
            ReportStatus::CounterexampleFound => ExitCode::VerificationFailure,
            ReportStatus::Undecided => ExitCode::Unknown,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "onestm",
    version,
    about = "Simulate and verify one-state Turing machines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a machine and print its halting verdict.
    Run(RunArgs),
    /// Print every configuration of a run, then the verdict.
    Trace(RunArgs),
    /// Print the unary-versus-base-k comparator as a machine file.
    Generate {
        #[arg(long)]
        base: u32,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MachineSource {
    /// `mcc` or `unary-vs-base:<k>`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Path to a machine definition file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub machine: MachineSource,
    #[arg(long, default_value = "")]
    pub input: String,
    #[arg(long, default_value_t = DEFAULT_FUEL)]
    pub fuel: u64,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Comparator halts on u^n 0^m h exactly when n >= 2^m - 1.
    Thm2 {
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        #[arg(long, default_value_t = 5)]
        mmax: usize,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
    /// Every split of u^(2^p-1) 0^p h can be pumped out of the language.
    Pump {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 8)]
        witness_max: usize,
    },
    /// No machine over {_, 1, ...} halts on 1 without halting on 11 and 111.
    Thm1 {
        #[arg(long)]
        gamma: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit: ExitCode,
}

impl CliOutput {
    fn ok(stdout: String, exit: ExitCode) -> Self {
        CliOutput {
            stdout,
            stderr: String::new(),
            exit,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CliOutput {
            stdout: String::new(),
            stderr,
            exit: ExitCode::UsageError,
        }
    }
}

/// Resolves `mcc` and `unary-vs-base:<k>`.
pub fn builtin_machine(name: &str) -> Result<OneStateMachine, String> {
    if name == "mcc" {
        return Ok(build_mcc());
    }
    if let Some(k) = name.strip_prefix("unary-vs-base:") {
        let k: u32 = k
            .parse()
            .map_err(|_| format!("invalid base in builtin {name:?}"))?;
        let base = Base::new(k).map_err(|e| e.to_string())?;
        return Ok(build_unary_vs_base(base));
    }
    Err(format!(
        "unknown builtin machine {name:?} (expected mcc or unary-vs-base:<k>)"
    ))
}

fn load_machine(source: &MachineSource) -> Result<OneStateMachine, String> {
    match (&source.builtin, &source.file) {
        (Some(name), _) => builtin_machine(name),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_machine(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, None) => Err("either --builtin or --file is required".to_string()),
    }
}

fn cmd_run(args: &RunArgs, with_trace: bool) -> CliOutput {
    let machine = match load_machine(&args.machine) {
        Ok(m) => m,
        Err(e) => return CliOutput::usage(e),
    };
    let result = if with_trace {
        trace(&machine, &args.input, args.fuel).map(|t| (t.to_text(), t.outcome))
    } else {
        run(&machine, &args.input, args.fuel, DetectorSet::ALL).map(|o| (format!("{o}\n"), o))
    };
    match result {
        Ok((text, outcome)) => CliOutput::ok(text, ExitCode::of_outcome(&outcome)),
        Err(e) => CliOutput::usage(e.to_string()),
    }
}

fn cmd_generate(k: u32) -> CliOutput {
    match Base::new(k) {
        Ok(base) => CliOutput::ok(
            serialize_machine(&build_unary_vs_base(base)),
            ExitCode::Success,
        ),
        Err(e) => CliOutput::usage(e.to_string()),
    }
}

fn report_output(report: VerificationReport) -> CliOutput {
    CliOutput {
        stdout: report.summary(),
        stderr: format!("elapsed: {:.3}s\n", report.elapsed.as_secs_f64()),
        exit: ExitCode::of_report(&report),
    }
}

fn cmd_verify(suite: &Suite) -> CliOutput {
    match *suite {
        Suite::Thm2 { nmax, mmax, fuel } => report_output(crosscheck_theorem2(nmax, mmax, fuel)),
        Suite::Pump { p, witness_max } => {
            if !(1..=12).contains(&p) {
                return CliOutput::usage(format!("--p must be between 1 and 12, got {p}"));
            }
            report_output(verify_lemma_notcf(p, witness_max))
        }
        Suite::Thm1 { gamma, kmax, fuel } => {
            if !(2..=4).contains(&gamma) {
                return CliOutput::usage(format!("--gamma must be between 2 and 4, got {gamma}"));
            }
            if kmax < 2 {
                return CliOutput::usage(format!("--kmax must be at least 2, got {kmax}"));
            }
            report_output(verify_theorem1(gamma, fuel, kmax))
        }
    }
}

pub fn execute(cli: &Cli) -> CliOutput {
    match &cli.command {
        Command::Run(args) => cmd_run(args, false),
        Command::Trace(args) => cmd_run(args, true),
        Command::Generate { base } => cmd_generate(*base),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Argument errors map to [`ExitCode::UsageError`].
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                CliOutput::ok(e.render().to_string(), ExitCode::Success)
            }
            _ => CliOutput::usage(e.render().to_string()),
        },
    }
}
