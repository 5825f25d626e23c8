#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use tautring_cli::{BinOp, Expr};

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn op() -> impl Strategy<Value = BinOp> {
    prop_oneof![
        Just(BinOp::Add),
        Just(BinOp::Sub),
        Just(BinOp::Mul),
        Just(BinOp::Div),
        Just(BinOp::Pow),
    ]
}

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["x", "k1", "k2", "ell", "V", "W", "F", "M6", "psi"]).prop_map(String::from)
}

fn func() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["dual", "twist", "sym", "wedge", "ch", "td", "push", "hilbert", "nf", "dim", "G"])
        .prop_map(String::from)
}

/// Arbitrary syntax trees, well-typed or not.
pub fn any_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..2000).prop_map(|n| Expr::Int(BigInt::from(n))),
        name().prop_map(Expr::Var),
    ];
    leaf.prop_recursive(4, 40, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (op(), inner.clone(), inner.clone()).prop_map(|(o, l, r)| Expr::bin(o, l, r)),
            (func(), prop::collection::vec(inner.clone(), 0..3)).prop_map(|(f, a)| Expr::Call(f, a)),
            (inner.clone(), prop::collection::vec(inner.clone(), 0..3))
                .prop_map(|(r, c)| Expr::Bundle(Box::new(r), c)),
            prop::collection::vec(inner.clone(), 0..3).prop_map(Expr::List),
            (inner.clone(), 0u64..5)
                .prop_map(|(b, i)| Expr::Index(Box::new(b), Box::new(Expr::Int(BigInt::from(i))))),
            (prop::collection::vec(1u32..4, 2), prop::collection::vec(inner, 1..3)).prop_map(|(w, rels)| {
                Expr::Ring {
                    vars: vec!["a".into(), "b".into()],
                    weights: w,
                    relations: rels,
                }
            }),
        ]
    })
}

/// Well-typed polynomial expressions in `k1, k2, x` with small powers.
pub fn poly_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..50).prop_map(Expr::int),
        prop::sample::select(vec!["k1", "k2", "x"]).prop_map(Expr::var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul]), inner.clone(), inner.clone())
                .prop_map(|(o, l, r)| Expr::bin(o, l, r)),
            (inner.clone(), 1i64..7).prop_map(|(l, d)| Expr::bin(BinOp::Div, l, Expr::int(d))),
            (inner, 0i64..3).prop_map(|(l, e)| Expr::bin(BinOp::Pow, l, Expr::int(e))),
        ]
    })
}

/// Well-typed bundle expressions over `W`, a rank-2 literal and a line.
pub fn bundle_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::var("W")),
        Just(Expr::Bundle(Box::new(Expr::int(2)), vec![Expr::var("a1"), Expr::var("a2")])),
        Just(Expr::call("line", vec![Expr::var("x")])),
    ];
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|b| Expr::call("dual", vec![b])),
            (inner.clone(), prop::sample::select(vec!["t", "x"]))
                .prop_map(|(b, t)| Expr::call("twist", vec![b, Expr::var(t)])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bin(BinOp::Add, a, b)),
            inner.prop_map(|b| Expr::call("wedge", vec![Expr::int(1), b])),
        ]
    })
}
