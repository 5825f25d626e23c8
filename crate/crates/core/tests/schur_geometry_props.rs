use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use tautring::geometry::{
    genus_of_class, plucker_degree, solve_scroll_coefficient, trigonal_maroni_valid,
    GrassmannData, HirzebruchClass,
};
use tautring::schur::{
    decompose_sym2_wedge2, dim_schur, lr_product, schur_polynomial, syt_count, Partition,
};
use tautring::{binomial, int, GradedPoly, Rational, VariableTable};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5c_2024),
        failure_persistence: None,
        ..Config::default()
    }
}

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..4, 0..4).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.iter().sum::<u32>() > max_size {
            parts.remove(0);
        }
        Partition::new(parts).unwrap()
    })
}

/// Standard tableaux by removing corners recursively.
fn brute_syt(p: &[u32]) -> u64 {
    if p.iter().all(|&x| x == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..p.len() {
        let is_corner = p[i] > 0 && (i + 1 == p.len() || p[i + 1] < p[i]);
        if is_corner {
            let mut q = p.to_vec();
            q[i] -= 1;
            total += brute_syt(&q);
        }
    }
    total
}

/// Schur polynomial as a sum over semistandard tableaux.
fn ssyt_schur(lambda: &Partition, t: &std::sync::Arc<VariableTable>) -> GradedPoly {
    let n = t.len() as u32;
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
        .collect();
    let mut out = GradedPoly::zero(t);
    let mut filling = vec![vec![0u32; lambda.part(0) as usize]; lambda.rows()];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        n: u32,
        filling: &mut Vec<Vec<u32>>,
        out: &mut GradedPoly,
        t: &std::sync::Arc<VariableTable>,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; n as usize];
            for &(i, j) in cells {
                e[filling[i][j] as usize] += 1;
            }
            out.add_term(e, Rational::from_integer(1.into()));
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { filling[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { filling[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            filling[i][j] = v;
            rec(k + 1, cells, n, filling, out, t);
        }
    }
    rec(0, &cells, n, &mut filling, &mut out, t);
    out
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn lr_dimensions(l in partition(5), m in partition(4), n in 1u32..6) {
        let prod = lr_product(&l, &m).unwrap();
        prop_assert_eq!(dim_schur(&l, n) * dim_schur(&m, n), prod.dimension(n));
        let sizes: Vec<u32> = prod.terms().map(|(p, _)| p.size()).collect();
        prop_assert!(sizes.iter().all(|&s| s == l.size() + m.size()));
    }

    #[test]
    fn lr_is_commutative(l in partition(4), m in partition(4)) {
        prop_assert_eq!(lr_product(&l, &m).unwrap(), lr_product(&m, &l).unwrap());
    }

    #[test]
    fn schur_dimension_vanishing(l in partition(8), n in 1u32..6) {
        prop_assert_eq!(dim_schur(&l, n) == BigInt::from(0), l.rows() > n as usize);
    }

    #[test]
    fn jacobi_trudi_matches_tableaux(l in partition(5), n in 1u32..4) {
        let t = VariableTable::indexed_uniform("x", n);
        prop_assert_eq!(schur_polynomial(&l, &t), ssyt_schur(&l, &t));
    }
}

#[test]
fn hook_lengths_against_enumeration() {
    for size in 0..=8 {
        for p in Partition::all_of_size(size) {
            assert_eq!(syt_count(&p), BigInt::from(brute_syt(p.parts())), "{p}");
        }
    }
}

#[test]
fn plethysm_dimensions() {
    let s22 = Partition::new(vec![2, 2]).unwrap();
    let s1111 = Partition::new(vec![1, 1, 1, 1]).unwrap();
    for n in 4..=7u32 {
        let d = decompose_sym2_wedge2(n).unwrap();
        assert_eq!(d.multiplicity(&s22), 1);
        assert_eq!(d.multiplicity(&s1111), 1);
        assert_eq!(d.len(), 2);
        let wedge2 = binomial(n as i64, 2);
        let expect = &wedge2 * (&wedge2 + BigInt::from(1)) / BigInt::from(2);
        assert_eq!(d.dimension(n), expect);
    }
}

#[test]
fn plethysm_by_tableau_expansion() {
    // h_2[e_2] in 4 and 5 variables equals s_22 + s_1111 computed from tableaux
    for n in [4u32, 5] {
        let t = VariableTable::indexed_uniform("x", n);
        let mut pairs = Vec::new();
        for i in 0..n as usize {
            for j in i + 1..n as usize {
                let mut e = vec![0; n as usize];
                e[i] = 1;
                e[j] = 1;
                pairs.push(GradedPoly::monomial(&t, e, int(1)));
            }
        }
        let mut h2 = GradedPoly::zero(&t);
        for a in 0..pairs.len() {
            for b in a..pairs.len() {
                h2 = &h2 + &(&pairs[a] * &pairs[b]);
            }
        }
        let s22 = ssyt_schur(&Partition::new(vec![2, 2]).unwrap(), &t);
        let s1111 = ssyt_schur(&Partition::new(vec![1, 1, 1, 1]).unwrap(), &t);
        assert_eq!(h2, &s22 + &s1111);
    }
}

#[test]
fn plucker_degree_is_rectangle_count() {
    for k in 1..=3u32 {
        for n in k + 1..=7 {
            let rect = Partition::rectangle(k, n - k);
            assert_eq!(plucker_degree(k, n).unwrap(), syt_count(&rect), "G({k},{n})");
        }
    }
}

#[test]
fn schubert_duality_against_lr() {
    for (k, n) in [(2u32, 4u32), (2, 5), (3, 6), (2, 6)] {
        let g = GrassmannData::new(k, n).unwrap();
        let rect = Partition::rectangle(k, n - k);
        let dim = g.dim();
        for a in 0..=dim {
            for l in Partition::all_of_size(a) {
                if !rect.contains(&l) {
                    continue;
                }
                for m in Partition::all_of_size(dim - a) {
                    if !rect.contains(&m) {
                        continue;
                    }
                    let integral = g
                        .integrate(&(&g.schubert_class(&l) * &g.schubert_class(&m)))
                        .unwrap();
                    let lr = lr_product(&l, &m).unwrap().multiplicity(&rect);
                    assert_eq!(integral, int(lr as i64), "G({k},{n}) {l} {m}");
                    let dual = l.complement_in(k, n - k).unwrap() == m;
                    assert_eq!(integral == int(1), dual);
                }
            }
        }
    }
}

#[test]
fn maroni_adjunction() {
    for g in 4..=12u32 {
        for n in 0..=g {
            let k = solve_scroll_coefficient(g, n);
            let parity = (g + n) % 2 == 0;
            assert_eq!(k.is_integer(), parity, "g={g} n={n}");
            assert_eq!(trigonal_maroni_valid(g, n), parity && 3 * n <= g + 2);
            if parity {
                let k = i64::try_from(k.to_integer()).unwrap();
                assert_eq!(k, (g as i64 - 3 * n as i64 + 2) / 2);
                for other in [k - 1, k, k + 1] {
                    let c = HirzebruchClass::from_sf(n, 3, other);
                    assert_eq!(genus_of_class(&c) == int(g as i64), other == k);
                }
            }
        }
    }
}
