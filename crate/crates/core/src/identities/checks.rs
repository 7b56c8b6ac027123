use std::time::Instant;

use log::info;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

use super::compound::{build_w, build_wa, SylvesterExponents};
use super::generic::{build_generic, generic_matrix, Constraints, GenericSpec};
use super::report::{CheckKind, VerificationReport, Witness};
use super::{Feasibility, IdentityError, PAIR_MAX_N, SINGLE_MAX_N};
use crate::exactmat::{brute_force_det, det_bareiss, det_laplace, k_subsets, IntMatrix, Matrix};
use crate::oracle::trial_rng;
use crate::polyring::{PolyError, Polynomial};

/// Largest dimension accepted by [`check_cauchy_binet`].
pub const CAUCHY_BINET_MAX_DIM: usize = 6;
/// Entries of random Cauchy–Binet instances are drawn from `[-bound, bound]`.
pub const CAUCHY_BINET_BOUND: i64 = 9;

/// Integer-point trials used by [`check_griolv_k2`] once `n` is past the symbolic bound.
pub const GRIOLV_POINT_TRIALS: u64 = 20;
const GRIOLV_POINT_SEED: u64 = 0x6772_696f_6c76;
const GRIOLV_POINT_BOUND: i64 = 50;

/// `det(W_A) = a_{n+1,n+1}^p * (det A)^q` for the generic `(n+1) x (n+1)` matrix.
pub fn check_sylvester(n: usize, k: usize) -> Result<VerificationReport, IdentityError> {
    check_sylvester_with(n, k, Feasibility::Bounded)
}

pub fn check_sylvester_with(n: usize, k: usize, feasibility: Feasibility) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    let exps = SylvesterExponents::new(n, k)?;
    feasibility.check(n, SINGLE_MAX_N)?;
    let a = generic_matrix(n);
    let corner = a.entry(n + 1, n + 1).clone();
    info!("sylvester n={n} k={k}: building W_A");
    let wa = build_wa(&a, k)?;
    info!("sylvester n={n} k={k}: det of {0}x{0} W_A", wa.family().len());
    let lhs = wa.det()?;
    let det_a = det_laplace(&a)?;
    let rhs = &corner.pow(exps.p) * &det_a.pow(exps.q);

    let mut report = VerificationReport::new(CheckKind::Sylvester, n, k);
    report.stats = Some(lhs.stats());
    if lhs != rhs {
        report.fail(
            Witness::new(format!("det(W_A) != a^{} * (det A)^{}", exps.p, exps.q))
                .with_poly("lhs", &lhs)
                .with_poly("rhs", &rhs),
        );
    }
    Ok(report.finish(started))
}

/// Chio condensation: `det(a_ij a_{n+1,n+1} - a_{i,n+1} a_{n+1,j}) = a_{n+1,n+1}^{n-1} det A`.
pub fn check_chio(n: usize) -> Result<VerificationReport, IdentityError> {
    check_chio_with(n, Feasibility::Bounded)
}

pub fn check_chio_with(n: usize, feasibility: Feasibility) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    if n < 1 {
        return Err(IdentityError::InvalidParameter("chio condensation needs n >= 1".into()));
    }
    feasibility.check(n, SINGLE_MAX_N)?;
    let a = generic_matrix(n);
    let last = n + 1;
    let corner = a.entry(last, last);
    let condensed = Matrix::from_fn(a.context().clone(), n, n, |i, j| {
        &(a.entry(i, j) * corner) - &(a.entry(i, last) * a.entry(last, j))
    });
    let mut report = VerificationReport::new(CheckKind::Chio, n, 1);

    // The condensed matrix is the k = 1 compound, entry for entry.
    let wa = build_wa(&a, 1)?;
    if wa.matrix() != &condensed {
        report.fail(Witness::new("condensed matrix differs from the k = 1 compound W_A"));
    }

    let lhs = det_laplace(&condensed)?;
    let exponent = u32::try_from(n - 1).expect("small n");
    let rhs = &corner.pow(exponent) * &det_laplace(&a)?;
    report.stats = Some(lhs.stats());
    if lhs != rhs {
        report.fail(
            Witness::new(format!("condensed determinant != a^{exponent} * det A"))
                .with_poly("lhs", &lhs)
                .with_poly("rhs", &rhs),
        );
    }
    Ok(report.finish(started))
}

/// Cauchy–Binet on random integer `A` (`n x p`) and `B` (`p x m`):
/// `det(sub_P^Q(AB)) = sum over |R| = k of det(sub_P^R A) * det(sub_R^Q B)` for all
/// `k`-subsets `P` of `[n]` and `Q` of `[m]`. When `k > p` the sum is empty.
pub fn check_cauchy_binet(
    dims: (usize, usize, usize),
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    let (n, p, m) = dims;
    if [n, p, m].iter().any(|&d| d > CAUCHY_BINET_MAX_DIM) {
        return Err(IdentityError::InvalidParameter(format!(
            "dimensions {dims:?} exceed {CAUCHY_BINET_MAX_DIM}"
        )));
    }
    if k > n.min(m) {
        return Err(IdentityError::InvalidParameter(format!(
            "k = {k} exceeds min(n, m) = {}",
            n.min(m)
        )));
    }
    let rows = k_subsets(n, k)?;
    let cols = k_subsets(m, k)?;
    // No k-subsets of [p] when k > p: the right side is an empty sum.
    let middle = k_subsets(p, k).map(|f| f.members().to_vec()).unwrap_or_default();

    let mut report = VerificationReport::new(CheckKind::CauchyBinet, n, k);
    report.dims = Some([n, p, m]);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let mut draw = |r: usize, c: usize| -> IntMatrix {
            Matrix::from_fn((), r, c, |_, _| {
                BigInt::from(rng.gen_range(-CAUCHY_BINET_BOUND..=CAUCHY_BINET_BOUND))
            })
        };
        let a = draw(n, p);
        let b = draw(p, m);
        let ab = a.matmul(&b)?;
        for big_p in rows.iter() {
            for big_q in cols.iter() {
                let lhs = det_bareiss(&ab.submatrix(big_p, big_q)?)?;
                let mut rhs = BigInt::zero();
                for r in &middle {
                    let ra = r.with_ground(p)?;
                    rhs += brute_force_det(&a.submatrix(big_p, &ra)?)? * brute_force_det(&b.submatrix(&ra, big_q)?)?;
                }
                if lhs != rhs {
                    report.fail(
                        Witness::new("minor of AB differs from the Cauchy–Binet sum")
                            .with_subsets(big_p, big_q)
                            .with_matrix("A", &a)
                            .with_matrix("B", &b)
                            .with_value("lhs", &lhs)
                            .with_value("rhs", &rhs)
                            .with_trial(trial),
                    );
                    return Ok(report.finish(started));
                }
            }
        }
    }
    Ok(report.finish(started))
}

/// The `k = 2` special case with both corners zero and all border entries 1.
///
/// Every entry of `W` must factor as
/// `(a_{j,k} + a_{i,l} - a_{i,k} - a_{j,l}) (b_{j,k} + b_{i,l} - b_{i,k} - b_{j,l})`
/// for `I = {i < j}`, `J = {k < l}`, and `det A * det B` must divide `det W`:
/// exactly for `n <= 3`, at seeded integer points beyond that.
pub fn check_griolv_k2(n: usize) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    if n < 2 {
        return Err(IdentityError::InvalidParameter("the k = 2 case needs n >= 2".into()));
    }
    let constraints = Constraints {
        a_corner_zero: true,
        b_corner_zero: true,
        borders_one_a: true,
        borders_one_b: true,
        ..Constraints::NONE
    };
    let pair = build_generic(&GenericSpec::new(n, constraints))?;
    let mut report = VerificationReport::new(CheckKind::Griolv, n, 2);
    let w = build_w(&pair.a, &pair.b, 2)?;

    let var = |name: String| Polynomial::var(&pair.universe, &name);
    let cross = |prefix: char, i: usize, j: usize, k: usize, l: usize| -> Result<Polynomial, PolyError> {
        let v = |r: usize, c: usize| var(format!("{prefix}_{r}_{c}"));
        Ok(&(&(&v(j, k)? + &v(i, l)?) - &v(i, k)?) - &v(j, l)?)
    };
    for rows in w.family() {
        for cols in w.family() {
            let (&[i, j], &[k, l]) = (rows.elements(), cols.elements()) else {
                unreachable!("2-subsets");
            };
            let expected = &cross('a', i, j, k, l)? * &cross('b', i, j, k, l)?;
            let actual = w.entry(rows, cols).expect("label in family");
            if *actual != expected {
                report.fail(
                    Witness::new("W entry differs from the closed form")
                        .with_subsets(rows, cols)
                        .with_poly("entry", actual)
                        .with_poly("closed_form", &expected),
                );
            }
        }
    }

    if n <= PAIR_MAX_N {
        info!("griolv n={n}: symbolic divisibility");
        let det_w = w.det()?;
        let divisor = &det_laplace(&pair.a)? * &det_laplace(&pair.b)?;
        report.stats = Some(det_w.stats());
        match det_w.exact_div(&divisor) {
            Ok(q) if &q * &divisor == det_w => {}
            Ok(_) => report.fail(Witness::new("quotient does not recompose det W")),
            Err(e) => report.fail(Witness::new(format!("det A * det B does not divide det W: {e}"))),
        }
    } else {
        info!("griolv n={n}: pointwise divisibility");
        let vars = pair.universe.len();
        for trial in 0..GRIOLV_POINT_TRIALS {
            let mut rng = trial_rng(GRIOLV_POINT_SEED, trial);
            let point: Vec<BigInt> = (0..vars)
                .map(|_| BigInt::from(rng.gen_range(-GRIOLV_POINT_BOUND..=GRIOLV_POINT_BOUND)))
                .collect();
            let a = pair.a.specialize(&point);
            let b = pair.b.specialize(&point);
            let det_w = build_w(&a, &b, 2)?.det()?;
            let divisor = det_bareiss(&a)? * det_bareiss(&b)?;
            if !divides(&divisor, &det_w) {
                report.fail(
                    Witness::new("det A * det B does not divide det W at an integer point")
                        .with_matrix("A", &a)
                        .with_matrix("B", &b)
                        .with_value("det_w", &det_w)
                        .with_value("divisor", &divisor)
                        .with_trial(trial),
                );
                break;
            }
        }
    }
    Ok(report.finish(started))
}

/// `d | w` in the integers: some integer `c` has `w = c d`. For `d = 0` that
/// means `w = 0`.
pub fn divides(d: &BigInt, w: &BigInt) -> bool {
    if d.is_zero() {
        w.is_zero()
    } else {
        w.is_multiple_of(d)
    }
}

/// The last-row-zero lemma: with `a_{n+1,j} = 0` for `j <= n` and
/// `b_{n+1,n+1} = 0`, `det A` divides `det W`.
///
/// Also checks the structural facts the argument rests on:
/// `det A = a_{n+1,n+1} det(A minus row and column n+1)`,
/// `det(sub_{I+}^{J+} A) = a_{n+1,n+1} det(sub_I^J A)` for all `I, J`, and that
/// every entry of `W` is a multiple of `a_{n+1,n+1}`.
pub fn check_lemma_adb0(n: usize, k: usize) -> Result<VerificationReport, IdentityError> {
    check_lemma_adb0_with(n, k, Feasibility::Bounded)
}

pub fn check_lemma_adb0_with(
    n: usize,
    k: usize,
    feasibility: Feasibility,
) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    if k > n {
        return Err(IdentityError::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    feasibility.check(n, PAIR_MAX_N)?;
    let constraints = Constraints {
        a_last_row_zero: true,
        b_corner_zero: true,
        ..Constraints::NONE
    };
    let pair = build_generic(&GenericSpec::new(n, constraints))?;
    let a = &pair.a;
    let last = n + 1;
    let corner = a.entry(last, last);
    let mut report = VerificationReport::new(CheckKind::LemmaAdb0, n, k);

    let det_a = det_laplace(a)?;
    let a_bar = a.remove_rc(last, last)?;
    if det_a != corner * &det_laplace(&a_bar)? {
        report.fail(Witness::new("det A != a_{n+1,n+1} * det(A without row and column n+1)"));
    }

    let family = k_subsets(n, k)?;
    for rows in family.iter() {
        for cols in family.iter() {
            let lifted = det_laplace(&a.submatrix(&rows.plus(), &cols.plus())?)?;
            let plain = det_laplace(&a.submatrix(rows, cols)?)?;
            if lifted != corner * &plain {
                report.fail(
                    Witness::new("det(sub_{I+}^{J+} A) != a_{n+1,n+1} * det(sub_I^J A)").with_subsets(rows, cols),
                );
            }
        }
    }

    let w = build_w(&pair.a, &pair.b, k)?;
    for (idx, entry) in w.matrix().entries().iter().enumerate() {
        if entry.exact_div(corner).is_err() {
            let side = family.len();
            report.fail(
                Witness::new("W entry is not a multiple of a_{n+1,n+1}")
                    .with_subsets(&family.members()[idx / side], &family.members()[idx % side])
                    .with_poly("entry", entry),
            );
        }
    }

    info!("lemma-adb0 n={n} k={k}: det of W");
    let det_w = w.det()?;
    report.stats = Some(det_w.stats());
    match det_w.exact_div(&det_a) {
        Ok(q) if &q * &det_a == det_w => {}
        Ok(_) => report.fail(Witness::new("quotient does not recompose det W")),
        Err(e) => report.fail(Witness::new(format!("det A does not divide det W: {e}")).with_poly("det_a", &det_a)),
    }
    Ok(report.finish(started))
}
