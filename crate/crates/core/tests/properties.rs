use std::collections::HashMap;
use std::sync::Arc;

use bisyl_core::identities::{build_w, build_wa, generic_matrix};
use bisyl_core::{
    brute_force_det, det_bareiss, det_laplace, AnyMatrix, IntMatrix, Matrix, Monomial, PolyError, Polynomial,
    VariableUniverse,
};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn universe() -> Arc<VariableUniverse> {
    Arc::new(VariableUniverse::new(["x", "y", "z"]).unwrap())
}

prop_compose! {
    fn poly(max_terms: usize)(terms in prop::collection::vec((prop::array::uniform3(0u32..4), -30i64..=30), 0..=max_terms)) -> Polynomial {
        let u = universe();
        Polynomial::from_terms(&u, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))))
    }
}

fn nonzero_poly(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec((-50i64..=50).prop_map(BigInt::from), 3)
}

fn int_matrix(size: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, size * size)
        .prop_map(move |v| Matrix::new((), size, size, v.into_iter().map(BigInt::from).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(p in poly(6), q in poly(6), r in poly(6)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(p.universe()), p.clone());
        prop_assert!((&p * &Polynomial::zero(p.universe())).is_zero());
    }

    #[test]
    fn exact_division_round_trips(p in poly(8), q in nonzero_poly(8)) {
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn division_by_non_factor_is_rejected(p in nonzero_poly(5), q in nonzero_poly(5)) {
        let shifted = &(&p * &q) + &Polynomial::constant(p.universe(), 1);
        // p*q + 1 is a multiple of q only when q is a unit.
        if q.as_constant().map_or(true, |c| c.abs() != BigInt::from(1)) {
            prop_assert_eq!(shifted.exact_div(&q), Err(PolyError::NotDivisible));
        }
    }

    #[test]
    fn content_is_multiplicative(p in poly(6), q in poly(6)) {
        prop_assert_eq!((&p * &q).content(), p.content() * q.content());
        prop_assert!(!p.content().is_negative());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(8), q in poly(8), x in point()) {
        prop_assert_eq!((&p * &q).evaluate_at(&x), p.evaluate_at(&x) * q.evaluate_at(&x));
        prop_assert_eq!((&p + &q).evaluate_at(&x), p.evaluate_at(&x) + q.evaluate_at(&x));
        let names: HashMap<String, BigInt> =
            ["x", "y", "z"].iter().map(|s| s.to_string()).zip(x.iter().cloned()).collect();
        prop_assert_eq!(p.evaluate(&names).unwrap(), p.evaluate_at(&x));
    }

    #[test]
    fn text_round_trips(p in poly(8)) {
        prop_assert_eq!(Polynomial::parse(p.universe(), &p.to_string()).unwrap(), p);
    }

    #[test]
    fn determinants_agree(m in (2usize..=6).prop_flat_map(|n| int_matrix(n, 30))) {
        let b = det_bareiss(&m).unwrap();
        prop_assert_eq!(det_laplace(&m).unwrap(), b.clone());
        prop_assert_eq!(brute_force_det(&m).unwrap(), b.clone());
        prop_assert_eq!(det_bareiss(&m.transpose()).unwrap(), b);
    }

    #[test]
    fn adjugate_inverts_up_to_det(m in int_matrix(4, 20)) {
        let d = det_bareiss(&m).unwrap();
        let id: IntMatrix = Matrix::identity((), 4);
        prop_assert_eq!(m.matmul(&m.adjugate().unwrap()).unwrap(), id.scale(&d));
    }

    #[test]
    fn matrix_text_round_trips(m in (0usize..=5).prop_flat_map(|n| int_matrix(n, 1000))) {
        prop_assert_eq!(AnyMatrix::parse(&m.to_string(), None).unwrap(), AnyMatrix::Int(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn specialization_commutes_with_det(values in prop::collection::vec(-40i64..=40, 16)) {
        let a = generic_matrix(3);
        let x: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
        let symbolic = det_laplace(&a).unwrap();
        prop_assert_eq!(symbolic.evaluate_at(&x), det_bareiss(&a.specialize(&x)).unwrap());
    }

    #[test]
    fn specialization_commutes_with_compounds(values in prop::collection::vec(-9i64..=9, 9), k in 0usize..=2) {
        let a = generic_matrix(2);
        let x: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
        let sym = build_wa(&a, k).unwrap();
        let int = build_wa(&a.specialize(&x), k).unwrap();
        for (s, i) in sym.matrix().entries().iter().zip(int.matrix().entries()) {
            prop_assert_eq!(&s.evaluate_at(&x), i);
        }
    }

    #[test]
    fn w_is_symmetric_under_transpose(a in int_matrix(4, 9), b in int_matrix(4, 9), k in 0usize..=3) {
        let w = build_w(&a, &b, k).unwrap();
        let wt = build_w(&a.transpose(), &b.transpose(), k).unwrap();
        prop_assert_eq!(wt.matrix(), &w.matrix().transpose());
    }
}
