use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::{IntMatrix, Matrix, MatrixError, Ring};

/// Largest size accepted by [`det_laplace`]; the memo table has `2^n` slots.
pub const LAPLACE_MAX: usize = 24;
/// Largest size accepted by [`brute_force_det`].
pub const BRUTE_FORCE_MAX: usize = 8;

/// Below this size the per-level work is too small to be worth spreading over threads.
const PARALLEL_FROM: usize = 5;

/// Determinant by column-by-column Laplace expansion, memoized on row subsets.
///
/// After processing columns `0..=c`, the table holds the minor on every row set
/// `S` of size `c + 1` against those columns, expanded along column `c`:
/// `M[S] = sum over r of (-1)^(r + c) * a[s_r][c] * M[S \ s_r]`. Each of the
/// `2^n` row subsets is expanded once, and only ring additions and
/// multiplications are performed, which keeps polynomial intermediates free of
/// division. Zero minors are not stored.
pub fn det_laplace<T: Ring>(m: &Matrix<T>) -> Result<T, MatrixError> {
    m.require_square()?;
    let n = m.rows();
    let ctx = m.context();
    if n == 0 {
        return Ok(T::one_in(ctx));
    }
    if n > LAPLACE_MAX {
        return Err(MatrixError::TooLarge {
            size: n,
            max: LAPLACE_MAX,
        });
    }

    let mut level: FxHashMap<u32, T> = (0..n)
        .filter(|&i| !m.at(i, 0).is_zero_elem())
        .map(|i| (1u32 << i, m.at(i, 0).clone()))
        .collect();

    for c in 1..n {
        let expand = |rows: u32| -> Option<(u32, T)> {
            let mut acc: Option<T> = None;
            let mut rank = 0usize;
            for i in 0..n {
                if rows & (1 << i) == 0 {
                    continue;
                }
                let entry = m.at(i, c);
                if !entry.is_zero_elem() {
                    if let Some(minor) = level.get(&(rows & !(1 << i))) {
                        let term = entry.times(minor);
                        acc = Some(match acc {
                            None if (rank + c) % 2 == 0 => term,
                            None => term.negated(),
                            Some(a) if (rank + c) % 2 == 0 => a.plus(&term),
                            Some(a) => a.minus(&term),
                        });
                    }
                }
                rank += 1;
            }
            acc.filter(|v| !v.is_zero_elem()).map(|v| (rows, v))
        };
        let subsets = subsets_of_size(n, c + 1);
        level = if n >= PARALLEL_FROM {
            subsets
                .into_par_iter()
                .filter_map(expand)
                .collect::<Vec<_>>()
                .into_iter()
                .collect()
        } else {
            subsets.into_iter().filter_map(expand).collect()
        };
    }

    Ok(level.remove(&((1u32 << n) - 1)).unwrap_or_else(|| T::zero_in(ctx)))
}

/// All `n`-bit masks with exactly `k` bits set, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1 << k) - 1;
    while s < limit {
        out.push(s as u32);
        // Gosper's hack: next integer with the same popcount.
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    out
}

/// Fraction-free (Bareiss) elimination over the integers. Every division in
/// the elimination is exact.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt, MatrixError> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.at(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let num = &row[j] * pivot - &row[k] * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss step left a remainder");
                row[j] = q;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Signed sum over all permutations. Only meant as an independent oracle.
pub fn brute_force_det<T: Ring>(m: &Matrix<T>) -> Result<T, MatrixError> {
    m.require_square()?;
    let n = m.rows();
    if n > BRUTE_FORCE_MAX {
        return Err(MatrixError::TooLarge {
            size: n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let ctx = m.context();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = T::zero_in(ctx);
    let mut odd = false;
    // Heap's algorithm: each step is a single transposition, flipping the sign.
    let mut counters = vec![0usize; n];
    let add_term = |perm: &[usize], odd: bool, total: &mut T| {
        let product = perm
            .iter()
            .enumerate()
            .fold(T::one_in(ctx), |acc, (i, &j)| acc.times(m.at(i, j)));
        *total = if odd {
            total.minus(&product)
        } else {
            total.plus(&product)
        };
    };
    add_term(&perm, odd, &mut total);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            odd = !odd;
            add_term(&perm, odd, &mut total);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Polynomial, VariableUniverse};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn int(rows: Vec<Vec<i64>>) -> IntMatrix {
        Matrix::from_rows(
            (),
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    fn random_int(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
        Matrix::from_fn((), n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
    }

    fn generic(n: usize) -> (Arc<VariableUniverse>, Matrix<Polynomial>) {
        let names: Vec<String> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| format!("a_{i}_{j}")))
            .collect();
        let u = Arc::new(VariableUniverse::new(names).unwrap());
        let m = Matrix::from_fn(Arc::clone(&u), n, n, |i, j| {
            Polynomial::var_at(&u, (i - 1) * n + (j - 1))
        });
        (u, m)
    }

    #[test]
    fn two_by_two_symbolic() {
        let (_, a) = generic(2);
        let d = det_laplace(&a).unwrap();
        assert_eq!(d.to_string(), "+1*a_1_1*a_2_2 -1*a_1_2*a_2_1");
        assert_eq!(brute_force_det(&a).unwrap(), d);
    }

    #[test]
    fn identity_and_empty() {
        let id: IntMatrix = Matrix::identity((), 5);
        assert_eq!(det_laplace(&id).unwrap(), BigInt::one());
        assert_eq!(det_bareiss(&id).unwrap(), BigInt::one());
        let empty: IntMatrix = Matrix::identity((), 0);
        assert_eq!(det_laplace(&empty).unwrap(), BigInt::one());
        assert_eq!(det_bareiss(&empty).unwrap(), BigInt::one());
        assert_eq!(brute_force_det(&empty).unwrap(), BigInt::one());
    }

    #[test]
    fn small_integer_cases() {
        assert_eq!(
            det_bareiss(&int(vec![vec![2, 1], vec![1, 2]])).unwrap(),
            BigInt::from(3)
        );
        let repeated = int(vec![vec![1, 2, 3], vec![4, 5, 6], vec![1, 2, 3]]);
        assert!(det_bareiss(&repeated).unwrap().is_zero());
        assert!(det_laplace(&repeated).unwrap().is_zero());
        // Needs a row swap to find a pivot.
        let swap = int(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(det_bareiss(&swap).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn one_by_one_symbolic() {
        let (_, a) = generic(1);
        assert_eq!(brute_force_det(&a).unwrap().to_string(), "+1*a_1_1");
        assert_eq!(det_laplace(&a).unwrap().to_string(), "+1*a_1_1");
    }

    #[test]
    fn generic_three_by_three_has_six_unit_terms() {
        let (_, a) = generic(3);
        let d = brute_force_det(&a).unwrap();
        assert_eq!(d.num_terms(), 6);
        assert!(d
            .terms()
            .iter()
            .all(|(_, c)| c == &BigInt::one() || c == &BigInt::from(-1)));
        assert_eq!(det_laplace(&a).unwrap(), d);
    }

    #[test]
    fn non_square_is_rejected() {
        let a = int(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(matches!(
            det_laplace(&a),
            Err(MatrixError::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(det_bareiss(&a), Err(MatrixError::NotSquare { .. })));
        assert!(matches!(brute_force_det(&a), Err(MatrixError::NotSquare { .. })));
    }

    #[test]
    fn brute_force_is_capped() {
        let id: IntMatrix = Matrix::identity((), 9);
        assert_eq!(brute_force_det(&id), Err(MatrixError::TooLarge { size: 9, max: 8 }));
        let id8: IntMatrix = Matrix::identity((), 8);
        assert_eq!(brute_force_det(&id8).unwrap(), BigInt::one());
    }

    #[test]
    fn bareiss_matches_permutation_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let a = random_int(&mut rng, 6, 99);
            assert_eq!(det_bareiss(&a).unwrap(), brute_force_det(&a).unwrap());
        }
    }

    #[test]
    fn laplace_matches_permutation_sum_on_integers() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = random_int(&mut rng, 5, 20);
            assert_eq!(det_laplace(&a).unwrap(), brute_force_det(&a).unwrap());
        }
    }

    #[test]
    fn laplace_matches_permutation_sum_on_symbolic_entries() {
        // Entries are single variables drawn with repetition, so cancellations occur.
        let u = Arc::new(VariableUniverse::new(["x", "y", "z", "w"]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = Matrix::from_fn(Arc::clone(&u), 4, 4, |_, _| {
                let v = Polynomial::var_at(&u, rng.gen_range(0..4));
                v.scale(&BigInt::from(rng.gen_range(-2..=2)))
            });
            assert_eq!(det_laplace(&a).unwrap(), brute_force_det(&a).unwrap());
        }
    }

    #[test]
    fn row_one_cofactor_expansion_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let a = random_int(&mut rng, 4, 30);
            let expansion: BigInt = (1..=4)
                .map(|j| {
                    let minor = det_laplace(&a.remove_rc(1, j).unwrap()).unwrap();
                    let signed = if (1 + j) % 2 == 0 { minor } else { -minor };
                    a.entry(1, j) * signed
                })
                .sum();
            assert_eq!(expansion, det_laplace(&a).unwrap());
        }
    }

    #[test]
    fn large_bareiss_stays_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = random_int(&mut rng, 12, 1_000_000);
        let b = random_int(&mut rng, 12, 1_000_000);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(
            det_bareiss(&ab).unwrap(),
            det_bareiss(&a).unwrap() * det_bareiss(&b).unwrap()
        );
        assert_eq!(det_laplace(&a).unwrap(), det_bareiss(&a).unwrap());
    }

    #[test]
    fn gosper_enumeration() {
        assert_eq!(
            subsets_of_size(4, 2),
            vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        );
        assert_eq!(subsets_of_size(3, 0), vec![0]);
        assert_eq!(subsets_of_size(3, 3), vec![0b111]);
    }
}
