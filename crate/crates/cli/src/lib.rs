//! The `bisyl` command line.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! usage or precondition error.

mod args;
mod render;

use std::ffi::OsString;
use std::io::Write;

use bisyl_core::identities::{
    check_cauchy_binet, check_chio_with, check_griolv_k2, check_lemma_adb0_with, check_sylvester_with, quotient_with,
    verify_divisibility, PAIR_MAX_N, SINGLE_MAX_N,
};
use bisyl_core::oracle::{fuzz_divisibility, fuzz_sylvester, negative_control};
use bisyl_core::{suite, Feasibility, FuzzPlan, IdentityError, MatrixError, Mode, QuotientOptions, Theorem};
use clap::error::ErrorKind;
use clap::Parser;

pub use args::{CheckArg, Cli, Command, FuzzArgs, ModeArg, QuotientArgs, SelftestArgs, TheoremArg, VerifyArgs};
pub use render::Report;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Defaults for sampling flags left out of `verify`.
pub const DEFAULT_TRIALS: u64 = 100;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BOUND: i64 = 50;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Internal(String),
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::InvalidParameter(_)
            | IdentityError::Infeasible { .. }
            | IdentityError::ContradictoryConstraints
            | IdentityError::Matrix(MatrixError::TooLarge { .. }) => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Parses `argv` (program name first), runs the command, writes reports to
/// `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_PASS {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    init_logging(verbose(&cli.command));
    match execute(&cli.command, out) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_FAIL
        }
    }
}

fn verbose(command: &Command) -> bool {
    match command {
        Command::Verify(a) => a.output.verbose,
        Command::Quotient(a) => a.output.verbose,
        Command::Fuzz(a) => a.output.verbose,
        Command::Selftest(a) => a.output.verbose,
    }
}

fn init_logging(verbose: bool) {
    let level = if verbose {
        log::LevelFilter::Info
    } else {
        log::LevelFilter::Warn
    };
    // A second call in the same process (tests) keeps the first logger.
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Runs the command; `Ok(pass)` once every report is written.
fn execute(command: &Command, out: &mut dyn Write) -> Result<bool, CliError> {
    let (reports, json) = match command {
        Command::Verify(a) => (verify(a)?, a.output.json),
        Command::Quotient(a) => (vec![quotient(a)?], a.output.json),
        Command::Fuzz(a) => (vec![fuzz(a)?], a.output.json),
        Command::Selftest(a) => return selftest(a.output.json, out),
    };
    let io = |e: std::io::Error| CliError::Internal(e.to_string());
    for r in &reports {
        if json {
            writeln!(out, "{}", r.to_json()).map_err(io)?;
        } else {
            write!(out, "{}", r.human()).map_err(io)?;
        }
    }
    Ok(reports.iter().all(Report::pass))
}

fn feasibility(allow_large: bool) -> Feasibility {
    if allow_large {
        Feasibility::Unbounded
    } else {
        Feasibility::Bounded
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn verify(a: &VerifyArgs) -> Result<Vec<Report>, CliError> {
    let feas = feasibility(a.allow_large);
    let ks = |max: usize| -> Vec<usize> { a.k.map_or_else(|| (0..=max).collect(), |k| vec![k]) };
    let plan = |theorem: Theorem, k: usize| FuzzPlan {
        theorem,
        n: a.n,
        k,
        trials: a.trials.unwrap_or(DEFAULT_TRIALS),
        seed: a.seed.unwrap_or(DEFAULT_SEED),
        bound: a.bound.unwrap_or(DEFAULT_BOUND),
    };
    if a.check != CheckArg::CauchyBinet && (a.p.is_some() || a.m.is_some()) {
        return Err(usage("--p and --m apply only to cauchy-binet"));
    }
    let pointwise = |max: usize| a.n > max && !a.allow_large;

    let mut reports = Vec::new();
    match a.check {
        CheckArg::Sylvester => {
            if a.n < 1 {
                return Err(usage("sylvester needs n >= 1"));
            }
            for k in ks(a.n) {
                reports.push(if pointwise(SINGLE_MAX_N) {
                    Report::Fuzz(fuzz_sylvester(&plan(Theorem::Sylv, k))?)
                } else {
                    Report::Verification(check_sylvester_with(a.n, k, feas)?)
                });
            }
        }
        CheckArg::Chio => {
            if a.n < 1 {
                return Err(usage("chio needs n >= 1"));
            }
            if a.k.is_some_and(|k| k != 1) {
                return Err(usage("chio is the k = 1 case"));
            }
            reports.push(Report::Verification(check_chio_with(a.n, feas)?));
        }
        CheckArg::CauchyBinet => {
            if a.bound.is_some() {
                return Err(usage(
                    "cauchy-binet draws entries from a fixed range; --bound does not apply",
                ));
            }
            let (p, m) = (a.p.unwrap_or(a.n), a.m.unwrap_or(a.n));
            let trials = a.trials.unwrap_or(DEFAULT_TRIALS);
            let seed = a.seed.unwrap_or(DEFAULT_SEED);
            for k in ks(a.n.min(m)) {
                reports.push(Report::Verification(check_cauchy_binet((a.n, p, m), k, trials, seed)?));
            }
        }
        CheckArg::Griolv => {
            if a.k.is_some_and(|k| k != 2) {
                return Err(usage("griolv is the k = 2 case"));
            }
            reports.push(Report::Verification(check_griolv_k2(a.n)?));
        }
        CheckArg::LemmaAdb0 => {
            for k in ks(a.n) {
                reports.push(if pointwise(PAIR_MAX_N) {
                    Report::Fuzz(fuzz_divisibility(&plan(Theorem::Adb0, k))?)
                } else {
                    Report::Verification(check_lemma_adb0_with(a.n, k, feas)?)
                });
            }
        }
        CheckArg::B0 | CheckArg::Ab0 => {
            let (mode, theorem) = match a.check {
                CheckArg::B0 => (Mode::B0, Theorem::B0),
                _ => (Mode::Ab0, Theorem::Ab0),
            };
            for k in ks(a.n) {
                reports.push(if pointwise(PAIR_MAX_N) {
                    Report::Fuzz(fuzz_divisibility(&plan(theorem, k))?)
                } else {
                    Report::Verification(verify_divisibility(mode, a.n, k, feas)?)
                });
            }
        }
    }
    Ok(reports)
}

fn quotient(a: &QuotientArgs) -> Result<Report, CliError> {
    let mode = match a.mode {
        ModeArg::B0 => Mode::B0,
        ModeArg::Ab0 => Mode::Ab0,
    };
    let options = QuotientOptions {
        feasibility: feasibility(a.allow_large),
        unconstrained_count: a.unconstrained_count,
    };
    Ok(Report::Quotient(Box::new(quotient_with(mode, a.n, a.k, options)?)))
}

fn fuzz(a: &FuzzArgs) -> Result<Report, CliError> {
    let theorem = match a.theorem {
        TheoremArg::B0 => Theorem::B0,
        TheoremArg::Ab0 => Theorem::Ab0,
        TheoremArg::Adb0 => Theorem::Adb0,
        TheoremArg::Sylv => Theorem::Sylv,
    };
    let plan = FuzzPlan {
        theorem,
        n: a.n,
        k: a.k,
        trials: a.trials,
        seed: a.seed,
        bound: a.bound,
    };
    let report = match (theorem, a.negative_control) {
        (Theorem::Sylv, true) => return Err(usage("--negative-control applies to divisibility theorems only")),
        (Theorem::Sylv, false) => fuzz_sylvester(&plan)?,
        (_, true) => negative_control(&plan)?,
        (_, false) => fuzz_divisibility(&plan)?,
    };
    Ok(Report::Fuzz(report))
}

fn selftest(json: bool, out: &mut dyn Write) -> Result<bool, CliError> {
    let io = |e: std::io::Error| CliError::Internal(e.to_string());
    let mut write_err = None;
    let results = suite::run_all(|r| {
        if !json {
            if let Err(e) = write!(out, "{}", render::criterion_line(r)) {
                write_err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = write_err {
        return Err(io(e));
    }
    let pass = results.iter().all(|r| r.pass);
    if json {
        let doc = serde_json::json!({ "criteria": results, "pass": pass });
        writeln!(out, "{doc}").map_err(io)?;
    } else {
        let failed = results.iter().filter(|r| !r.pass).count();
        writeln!(
            out,
            "selftest: {} of {} criteria pass",
            results.len() - failed,
            results.len()
        )
        .map_err(io)?;
    }
    Ok(pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("bisyl").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn pass_writes_only_stdout() {
        let (code, out, err) = run_args(&["verify", "--check", "chio", "--n", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.starts_with("PASS chio n=2 k=1"));
        assert!(err.is_empty());
    }

    #[test]
    fn irrelevant_flags_are_usage_errors() {
        assert_eq!(
            run_args(&["verify", "--check", "chio", "--n", "2", "--k", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["verify", "--check", "sylvester", "--n", "2", "--p", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["verify", "--check", "cauchy-binet", "--n", "2", "--bound", "3"]).0,
            EXIT_USAGE
        );
        let (_, _, err) = run_args(&["verify", "--check", "griolv", "--n", "3", "--k", "1"]);
        assert_eq!(err, "error: griolv is the k = 2 case\n");
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_args(&["fuzz", "--help"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("--negative-control"));
        assert!(err.is_empty());
    }

    #[test]
    fn infeasible_symbolic_run_is_a_usage_error() {
        let (code, _, err) = run_args(&["verify", "--check", "chio", "--n", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("symbolic bound"));
    }

    #[test]
    fn allow_large_lifts_the_bound() {
        let (code, out, _) = run_args(&[
            "verify",
            "--check",
            "b0",
            "--n",
            "4",
            "--k",
            "0",
            "--allow-large",
            "--json",
        ]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("\"check\":\"b0\""));
    }
}
