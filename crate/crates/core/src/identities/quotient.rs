use std::time::Instant;

use log::info;

use super::compound::build_w;
use super::generic::{build_generic, Constraints, GenericSpec};
use super::report::{elapsed_ms, CheckKind, Mode, QuotientReport, VerificationReport, Witness};
use super::{Feasibility, IdentityError, PAIR_MAX_N};
use crate::exactmat::det_laplace;
use crate::polyring::{PolyError, Polynomial};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QuotientOptions {
    pub feasibility: Feasibility,
    /// Also expand `det W` for the fully generic pair and report its size.
    pub unconstrained_count: bool,
}

impl Mode {
    pub fn constraints(self) -> Constraints {
        match self {
            Mode::B0 => Constraints {
                b_corner_zero: true,
                ..Constraints::NONE
            },
            Mode::Ab0 => Constraints {
                a_corner_zero: true,
                b_corner_zero: true,
                ..Constraints::NONE
            },
        }
    }
}

/// Symbolic `det W` for the generic pair under `constraints`.
pub fn generic_det_w(
    n: usize,
    k: usize,
    constraints: Constraints,
) -> Result<(Polynomial, Polynomial, Polynomial), IdentityError> {
    let pair = build_generic(&GenericSpec::new(n, constraints))?;
    let w = build_w(&pair.a, &pair.b, k)?;
    info!("det W: n={n} k={k}, {0}x{0}", w.family().len());
    let det_w = w.det()?;
    Ok((det_w, det_laplace(&pair.a)?, det_laplace(&pair.b)?))
}

/// Divides the symbolic `det W` by `det A` (mode B0) or `det A * det B`
/// (mode AB0) and reports the size of the quotient.
pub fn quotient(mode: Mode, n: usize, k: usize) -> Result<QuotientReport, IdentityError> {
    quotient_with(mode, n, k, QuotientOptions::default())
}

pub fn quotient_with(
    mode: Mode,
    n: usize,
    k: usize,
    options: QuotientOptions,
) -> Result<QuotientReport, IdentityError> {
    let started = Instant::now();
    if k > n {
        return Err(IdentityError::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    options.feasibility.check(n, PAIR_MAX_N)?;
    let (det_w, det_a, det_b) = generic_det_w(n, k, mode.constraints())?;
    let divisor = match mode {
        Mode::B0 => det_a,
        Mode::Ab0 => &det_a * &det_b,
    };

    info!(
        "quotient {}: dividing {} terms by {} terms",
        mode.as_str(),
        det_w.num_terms(),
        divisor.num_terms()
    );
    // A zero divisor divides only zero; the quotient is then taken to be 0.
    let (divisible, quotient, mut witness) = match det_w.exact_div(&divisor) {
        Ok(q) => (true, Some(q), None),
        Err(PolyError::DivisionByZero) if det_w.is_zero() => (true, Some(Polynomial::zero(det_w.universe())), None),
        Err(e) => (
            false,
            None,
            Some(Witness::new(format!("divisor does not divide det W: {e}"))),
        ),
    };
    let recomposed = quotient.as_ref().is_some_and(|q| q * &divisor == det_w);
    if divisible && !recomposed {
        witness = Some(Witness::new("quotient times divisor differs from det W"));
    }

    let unconstrained_detw_stats = if options.unconstrained_count {
        Some(generic_det_w(n, k, Constraints::NONE)?.0.stats())
    } else {
        None
    };

    Ok(QuotientReport {
        check: CheckKind::Quotient,
        n,
        k,
        mode,
        pass: divisible && recomposed,
        divisible,
        stats: quotient.as_ref().map(Polynomial::stats),
        detw_stats: det_w.stats(),
        divisor_stats: divisor.stats(),
        unconstrained_detw_stats,
        witness,
        elapsed_ms: elapsed_ms(started),
        quotient,
        det_w,
        divisor,
    })
}

/// The quotient run as a pass/fail check of the mode's divisibility theorem.
/// `stats` describes the quotient.
pub fn verify_divisibility(
    mode: Mode,
    n: usize,
    k: usize,
    feasibility: Feasibility,
) -> Result<VerificationReport, IdentityError> {
    let q = quotient_with(
        mode,
        n,
        k,
        QuotientOptions {
            feasibility,
            unconstrained_count: false,
        },
    )?;
    let check = match mode {
        Mode::B0 => CheckKind::B0,
        Mode::Ab0 => CheckKind::Ab0,
    };
    let mut report = VerificationReport::new(check, n, k);
    report.mode = Some(mode);
    report.stats = q.stats;
    report.pass = q.pass;
    report.witness = q.witness;
    report.elapsed_ms = q.elapsed_ms;
    Ok(report)
}
