use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use tautring::{monomial_basis, rat, ExactMatrix, GradedPoly, Rational, VariableTable};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x7a17_2024),
        failure_persistence: None,
        ..Config::default()
    }
}

fn table() -> Arc<VariableTable> {
    VariableTable::new([("k1", 1), ("k2", 2), ("k3", 3)]).unwrap()
}

fn poly() -> impl Strategy<Value = GradedPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -9i64..10, 1i64..4), 0..6).prop_map(
        |terms| {
            let t = table();
            GradedPoly::from_terms(
                &t,
                terms
                    .into_iter()
                    .map(|((a, b, c), n, d)| (vec![a, b, c], rat(n, d))),
            )
        },
    )
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
}

/// Coefficient of `t^d` in `prod 1/(1 - t^w)`, by repeated series division.
fn generating_count(weights: &[u32], d: u32) -> usize {
    let mut series = vec![0usize; d as usize + 1];
    series[0] = 1;
    for &w in weights {
        for i in w as usize..=d as usize {
            series[i] += series[i - w as usize];
        }
    }
    series[d as usize]
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn homogeneous_degrees_add(d1 in 0u32..5, d2 in 0u32..5, a in poly(), b in poly()) {
        let (x, y) = (a.component(d1), b.component(d2));
        if !x.is_zero() && !y.is_zero() {
            prop_assert_eq!((&x * &y).homogeneous_degree().unwrap(), Some(d1 + d2));
        }
    }

    #[test]
    fn rational_division_is_exact(a in rational(), b in rational()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn basis_size_matches_generating_function(
        weights in prop::collection::vec(1u32..4, 0..4),
        d in 0u32..9,
    ) {
        let t = VariableTable::new(
            weights.iter().enumerate().map(|(i, &w)| (format!("x{i}"), w)),
        ).unwrap();
        let basis = monomial_basis(&t, d);
        prop_assert_eq!(basis.len(), generating_count(&weights, d));
        prop_assert!(basis.iter().all(|m| t.degree(m) == d));
    }

    #[test]
    fn row_reduction_is_idempotent_and_permutation_invariant(
        rows in prop::collection::vec(prop::collection::vec(-5i64..6, 4), 1..6),
        seed in any::<u64>(),
    ) {
        let m = ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
            4,
        );
        let once = m.row_reduce();
        let twice = once.echelon.row_reduce();
        prop_assert_eq!(&once.echelon, &twice.echelon);
        prop_assert_eq!(once.rank, twice.rank);
        let mut perm: Vec<usize> = (0..rows.len()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = ExactMatrix::from_rows(
            perm.iter().map(|&i| m.row(i).to_vec()).collect(),
            4,
        );
        prop_assert_eq!(shuffled.rank(), once.rank);
        // the reduced form is unique, hence independent of row order
        prop_assert_eq!(shuffled.row_reduce().echelon, once.echelon);
    }

    #[test]
    fn square_determinant_detects_rank(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 3), 3)) {
        let m = ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
            3,
        );
        prop_assert_eq!(m.determinant().is_zero(), m.rank() < 3);
    }
}

#[test]
fn determinant_by_cofactor_oracle() {
    let m = ExactMatrix::from_int_rows(&[&[127, -2304, 0], &[0, 127, -2304], &[113, 0, -36864]]);
    let e = |r: usize, c: usize| m[(r, c)].clone();
    let cof = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    assert_eq!(m.determinant(), cof);
    assert_eq!(cof, Rational::from_integer(BigInt::from(5_271_552)));
}
