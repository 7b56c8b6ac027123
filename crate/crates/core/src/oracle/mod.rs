//! Seeded integer-point testing of the divisibility theorems and of
//! Sylvester's identity at sizes the symbolic engine cannot reach.
//!
//! If `det W = det A * Q` as polynomials then `det A(x)` divides `det W(x)` at
//! every integer point `x`, so one failing point on a constrained instance is a
//! bug. Passing points are evidence, not proof.

use std::time::Instant;

use log::info;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactmat::{det_bareiss, IntMatrix, Matrix};
use crate::identities::{build_w, build_wa, divides, Constraints, IdentityError, SylvesterExponents, Witness};

/// Largest `n` accepted by [`fuzz_divisibility`] and [`negative_control`].
pub const DIVISIBILITY_MAX_N: usize = 8;
/// Largest `n` accepted by [`fuzz_sylvester`].
pub const SYLVESTER_MAX_N: usize = 7;

/// The random stream for one trial. Each trial gets its own ChaCha stream
/// under the master seed, so trials can run in any order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `b_{n+1,n+1} = 0` implies `det A | det W`.
    B0,
    /// Both corners zero implies `det A * det B | det W`.
    Ab0,
    /// `a_{n+1,j} = 0` for `j <= n` and `b_{n+1,n+1} = 0` imply `det A | det W`.
    Adb0,
    /// `det W_A = a_{n+1,n+1}^p (det A)^q`.
    Sylv,
    /// Cauchy–Binet; fuzzed by `check_cauchy_binet`, not here.
    Cb,
}

impl Theorem {
    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::B0 => "b0",
            Theorem::Ab0 => "ab0",
            Theorem::Adb0 => "adb0",
            Theorem::Sylv => "sylv",
            Theorem::Cb => "cb",
        }
    }

    /// Entries pinned to zero in random instances.
    pub fn constraints(self) -> Constraints {
        let mut c = Constraints::NONE;
        match self {
            Theorem::B0 => c.b_corner_zero = true,
            Theorem::Ab0 => {
                c.a_corner_zero = true;
                c.b_corner_zero = true;
            }
            Theorem::Adb0 => {
                c.a_last_row_zero = true;
                c.b_corner_zero = true;
            }
            Theorem::Sylv | Theorem::Cb => {}
        }
        c
    }

    fn is_divisibility(self) -> bool {
        matches!(self, Theorem::B0 | Theorem::Ab0 | Theorem::Adb0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzPlan {
    pub theorem: Theorem,
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    /// Entries are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
}

impl FuzzPlan {
    fn validate(&self, max_n: usize) -> Result<(), IdentityError> {
        let bad = |msg: String| Err(IdentityError::InvalidParameter(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.bound < 1 {
            return bad(format!("bound must be at least 1, got {}", self.bound));
        }
        if self.n > max_n {
            return bad(format!("n = {} exceeds {max_n} for pointwise checks", self.n));
        }
        if self.k > self.n {
            return bad(format!("k = {} exceeds n = {}", self.k, self.n));
        }
        Ok(())
    }
}

/// How a negative-control run went.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ControlInfo {
    /// `n = 0`: the divisor always divides, so no failure can be expected.
    pub vacuous: bool,
    /// No failure at the planned bound, so the run was repeated once with ten
    /// times the bound; `bound` in the report is the one actually used.
    pub escalated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzReport {
    #[serde(flatten)]
    pub plan: FuzzPlan,
    pub passes: u64,
    pub failures: u64,
    /// The failing trial with the lowest index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Witness>,
    pub evidence: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub control: Option<ControlInfo>,
    pub elapsed_ms: u64,
}

impl FuzzReport {
    /// No failures, or for a negative control, at least one failure (or a
    /// vacuous run).
    pub fn pass(&self) -> bool {
        match self.control {
            Some(c) => c.vacuous || self.failures > 0,
            None => self.failures == 0,
        }
    }
}

/// `(n+1) x (n+1)` integer matrices `A`, `B` with entries uniform in
/// `[-bound, bound]`, then the theorem's zero pattern applied.
pub fn random_instance(plan: &FuzzPlan, trial: u64) -> (IntMatrix, IntMatrix) {
    sample(plan, trial, plan.theorem.constraints())
}

fn sample(plan: &FuzzPlan, trial: u64, c: Constraints) -> (IntMatrix, IntMatrix) {
    let size = plan.n + 1;
    let mut rng = trial_rng(plan.seed, trial);
    let mut draw = || {
        Matrix::from_fn((), size, size, |_, _| {
            BigInt::from(rng.gen_range(-plan.bound..=plan.bound))
        })
    };
    let (mut a, mut b) = (draw(), draw());
    let zero = |m: &mut IntMatrix, i: usize, j: usize| {
        *m = Matrix::from_fn((), size, size, |r, s| {
            if (r, s) == (i, j) {
                BigInt::default()
            } else {
                m.entry(r, s).clone()
            }
        });
    };
    if c.a_corner_zero {
        zero(&mut a, size, size);
    }
    if c.b_corner_zero {
        zero(&mut b, size, size);
    }
    if c.a_last_row_zero {
        for j in 1..size {
            zero(&mut a, size, j);
        }
    }
    (a, b)
}

/// Checks the theorem's divisibility at `plan.trials` random integer points.
pub fn fuzz_divisibility(plan: &FuzzPlan) -> Result<FuzzReport, IdentityError> {
    require_divisibility(plan)?;
    run(plan, plan.theorem.constraints())
}

/// Same as [`fuzz_divisibility`] with the zero pattern left out, so failures
/// are expected. One escalation to ten times the bound if none show up.
pub fn negative_control(plan: &FuzzPlan) -> Result<FuzzReport, IdentityError> {
    require_divisibility(plan)?;
    let vacuous = plan.n == 0;
    let mut report = run(plan, Constraints::NONE)?;
    let mut escalated = false;
    if report.failures == 0 && !vacuous {
        if let Some(bound) = plan.bound.checked_mul(10) {
            info!(
                "negative control: no failures at bound {}, retrying at {bound}",
                plan.bound
            );
            report = run(&FuzzPlan { bound, ..*plan }, Constraints::NONE)?;
            escalated = true;
        }
    }
    report.control = Some(ControlInfo { vacuous, escalated });
    Ok(report)
}

/// Checks `det W_A = a_{n+1,n+1}^p (det A)^q` exactly on random integer `A`.
pub fn fuzz_sylvester(plan: &FuzzPlan) -> Result<FuzzReport, IdentityError> {
    if plan.theorem != Theorem::Sylv {
        return Err(IdentityError::InvalidParameter(format!(
            "fuzz_sylvester needs theorem sylv, got {}",
            plan.theorem.as_str()
        )));
    }
    plan.validate(SYLVESTER_MAX_N)?;
    let exps = SylvesterExponents::new(plan.n, plan.k)?;
    let started = Instant::now();
    let outcomes = (0..plan.trials)
        .into_par_iter()
        .map(|trial| {
            let (a, _) = random_instance(plan, trial);
            let lhs = build_wa(&a, plan.k)?.det()?;
            let corner = a.entry(plan.n + 1, plan.n + 1);
            let rhs =
                num_traits::pow(corner.clone(), exps.p as usize) * num_traits::pow(det_bareiss(&a)?, exps.q as usize);
            Ok((lhs != rhs).then(|| {
                Witness::new("det W_A differs from corner^p * (det A)^q")
                    .with_trial(trial)
                    .with_matrix("A", &a)
                    .with_value("det_wa", &lhs)
                    .with_value("rhs", &rhs)
            }))
        })
        .collect::<Result<Vec<_>, IdentityError>>()?;
    Ok(reduce(plan, outcomes, started))
}

fn require_divisibility(plan: &FuzzPlan) -> Result<(), IdentityError> {
    if !plan.theorem.is_divisibility() {
        return Err(IdentityError::InvalidParameter(format!(
            "{} is not a divisibility theorem",
            plan.theorem.as_str()
        )));
    }
    plan.validate(DIVISIBILITY_MAX_N)
}

fn run(plan: &FuzzPlan, constraints: Constraints) -> Result<FuzzReport, IdentityError> {
    let started = Instant::now();
    info!(
        "fuzz {}: n={} k={} trials={} bound={}",
        plan.theorem.as_str(),
        plan.n,
        plan.k,
        plan.trials,
        plan.bound
    );
    let outcomes = (0..plan.trials)
        .into_par_iter()
        .map(|trial| {
            let (a, b) = sample(plan, trial, constraints);
            let det_w = build_w(&a, &b, plan.k)?.det()?;
            let det_a = det_bareiss(&a)?;
            let divisor = match plan.theorem {
                Theorem::Ab0 => det_a * det_bareiss(&b)?,
                _ => det_a,
            };
            Ok((!divides(&divisor, &det_w)).then(|| {
                Witness::new("divisor does not divide det W at this point")
                    .with_trial(trial)
                    .with_matrix("A", &a)
                    .with_matrix("B", &b)
                    .with_value("det_w", &det_w)
                    .with_value("divisor", &divisor)
            }))
        })
        .collect::<Result<Vec<_>, IdentityError>>()?;
    Ok(reduce(plan, outcomes, started))
}

/// Outcomes arrive in trial order, so the first failure is the lowest index.
fn reduce(plan: &FuzzPlan, outcomes: Vec<Option<Witness>>, started: Instant) -> FuzzReport {
    let failures = outcomes.iter().filter(|o| o.is_some()).count() as u64;
    FuzzReport {
        plan: *plan,
        passes: plan.trials - failures,
        failures,
        first_failure: outcomes.into_iter().flatten().next(),
        evidence: "pointwise",
        control: None,
        elapsed_ms: crate::identities::elapsed_ms(started),
    }
}
