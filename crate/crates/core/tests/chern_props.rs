use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use tautring::chern::{
    chern_character, chern_from_character, direct_sum, dual, sequence_quotient, sym_power, twist,
    wedge_power, FormalBundle, LineClass,
};
use tautring::{binomial, int, monomial_basis, rat, GradedPoly, Rational, VariableTable};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0xc4e2_0006),
        failure_persistence: None,
        ..Config::default()
    }
}

fn table() -> Arc<VariableTable> {
    VariableTable::new([("a1", 1), ("a2", 2), ("b1", 1), ("b3", 3), ("t", 1), ("u", 1)]).unwrap()
}

/// Homogeneous class of degree `d` with small coefficients drawn from `coeffs`.
fn class(t: &Arc<VariableTable>, d: u32, coeffs: &mut impl Iterator<Item = i64>) -> GradedPoly {
    GradedPoly::from_terms(
        t,
        monomial_basis(t, d)
            .into_iter()
            .map(|m| (m, int(coeffs.next().unwrap_or(0)))),
    )
}

fn bundle_from(rank: u32, trunc: u32, coeffs: Vec<i64>) -> FormalBundle {
    let t = table();
    let mut it = coeffs.into_iter();
    let classes = (1..=rank.min(trunc)).map(|d| class(&t, d, &mut it)).collect();
    FormalBundle::new(rank, classes, &t, trunc).unwrap()
}

fn bundle(max_rank: u32, trunc: u32) -> impl Strategy<Value = FormalBundle> {
    (0..=max_rank, prop::collection::vec(-2i64..3, 80))
        .prop_map(move |(r, cs)| bundle_from(r, trunc, cs))
}

fn line() -> impl Strategy<Value = LineClass> {
    (-3i64..4, -3i64..4, 1i64..3).prop_map(|(x, y, d)| {
        let t = table();
        let c = &GradedPoly::var(&t, "t").unwrap().scale(&rat(x, d))
            + &GradedPoly::var(&t, "u").unwrap().scale(&rat(y, 1));
        LineClass::new(c).unwrap()
    })
}

/// Adams operation `ψ^2` on a Chern character: `ch_k -> 2^k ch_k`.
fn adams2(ch: &[GradedPoly]) -> Vec<GradedPoly> {
    ch.iter()
        .enumerate()
        .map(|(k, c)| c.scale(&int(1 << k)))
        .collect()
}

fn series_mul(a: &[GradedPoly], b: &[GradedPoly]) -> Vec<GradedPoly> {
    let t = a[0].table();
    (0..a.len())
        .map(|k| (0..=k).fold(GradedPoly::zero(t), |acc, i| &acc + &(&a[i] * &b[k - i])))
        .collect()
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn whitney(a in bundle(3, 4), b in bundle(3, 4)) {
        let s = direct_sum(&a, &b).unwrap();
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
        prop_assert_eq!(s.total_class(), (&a.total_class() * &b.total_class()).truncate(4));
    }

    #[test]
    fn quotient_inverts_direct_sum(a in bundle(3, 4), b in bundle(3, 4)) {
        let s = direct_sum(&a, &b).unwrap();
        prop_assert_eq!(sequence_quotient(&s, &a).unwrap(), b);
    }

    #[test]
    fn twist_composes(b in bundle(4, 4), s in line(), t in line()) {
        let st = LineClass::new(s.c1() + t.c1()).unwrap();
        prop_assert_eq!(
            twist(&twist(&b, &s).unwrap(), &t).unwrap(),
            twist(&b, &st).unwrap()
        );
        prop_assert_eq!(twist(&b, &LineClass::zero(&table())).unwrap(), b);
    }

    #[test]
    fn dual_is_involution(b in bundle(4, 4)) {
        prop_assert_eq!(dual(&dual(&b)), b);
    }

    #[test]
    fn character_roundtrip(b in bundle(3, 5)) {
        let ch = chern_character(&b);
        prop_assert_eq!(ch[1].clone(), b.c(1));
        prop_assert_eq!(chern_from_character(&ch, b.rank(), 5).unwrap(), b);
    }

    #[test]
    fn sym_square_matches_adams(b in bundle(3, 3)) {
        let s = sym_power(&b, 2).unwrap();
        let ch = chern_character(&b);
        let sq: Vec<GradedPoly> = series_mul(&ch, &ch)
            .iter()
            .zip(adams2(&ch))
            .map(|(x, y)| (x + &y).scale(&rat(1, 2)))
            .collect();
        prop_assert_eq!(chern_character(&s), sq);
    }

    #[test]
    fn wedge_square_matches_adams(b in bundle(3, 3)) {
        prop_assume!(b.rank() >= 2);
        let w = wedge_power(&b, 2).unwrap();
        let ch = chern_character(&b);
        let sq: Vec<GradedPoly> = series_mul(&ch, &ch)
            .iter()
            .zip(adams2(&ch))
            .map(|(x, y)| (x - &y).scale(&rat(1, 2)))
            .collect();
        prop_assert_eq!(chern_character(&w), sq);
    }

    #[test]
    fn tensor_matches_twist_for_lines(b in bundle(3, 4), l in line()) {
        let lb = FormalBundle::line(&l, 4);
        prop_assert_eq!(tautring::chern::tensor(&b, &lb).unwrap(), twist(&b, &l).unwrap());
    }

    #[test]
    fn wedge_four_of_rank_five(cs in prop::collection::vec(-2i64..3, 80)) {
        let v = bundle_from(5, 3, cs);
        let det = LineClass::new(v.c(1)).unwrap();
        prop_assert_eq!(wedge_power(&v, 4).unwrap(), twist(&dual(&v), &det).unwrap());
    }
}

#[test]
fn construction_ranks() {
    for r in 1..=5u32 {
        let b = FormalBundle::generic("c", r, 2);
        for k in 0..=3u32 {
            let expect = binomial(r as i64 + k as i64 - 1, k as i64);
            assert_eq!(sym_power(&b, k).unwrap().rank() as i64, i64::try_from(expect).unwrap());
        }
        for k in 0..=r {
            let expect = binomial(r as i64, k as i64);
            assert_eq!(wedge_power(&b, k).unwrap().rank() as i64, i64::try_from(expect).unwrap());
        }
    }
}

#[test]
fn first_class_of_rank_two_symmetric_powers() {
    let w = FormalBundle::generic("w", 2, 2);
    for k in 0..=8u32 {
        let c1 = sym_power(&w, k).unwrap().c(1);
        let expect = w.c(1).scale(&Rational::from_integer((k * (k + 1) / 2).into()));
        assert_eq!(c1, expect, "k = {k}");
    }
}
