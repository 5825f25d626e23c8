use num_bigint::BigInt;
use num_traits::ToPrimitive;

use tautring::chern::{
    chern_character, dual, solve_hyperelliptic_twist, solve_sl_twist, solve_trigonal_twist,
    sym_power, twist, wedge_power,
};
use tautring::geometry::{
    canonical_quadrics, forms_dim, grass_dim, genus_of_class, mukai_quadric_rank, plucker_degree,
    solve_scroll_coefficient, stratum_dimensions, trigonal_maroni_valid, trigonal_stratum_dim,
};
use tautring::grr::{
    canonical_quadric_bundle, ch_pushforward_omega_power, fi_in_terms_of_vi, fve_roundtrip,
    fve_table, hodge_bundle, kappa_table, lambda1_coefficient, omega_power_rank,
};
use tautring::schur::{decompose_sym2_wedge2, dim_schur, syt_count};
use tautring::{
    binomial, int, parse_poly, rat, FormalBundle, GradedPoly, HirzebruchClass, LineClass, Partition,
    RingPresentation, VariableTable,
};

use super::{Check, Provenance, SuiteConfig, Tally};

type R<T = ()> = tautring::Result<T>;

fn list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn classes(b: &FormalBundle) -> String {
    list(&(1..=b.rank().min(b.trunc())).map(|i| b.c(i)).collect::<Vec<_>>())
}

fn m6_presentation(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let ring = &cfg.presentation;
    t.check("hilbert[0..8]", list(&ring.hilbert_function(8)), "[1,1,2,1,1,0,0,0,0]");
    t.check("dim R^4", ring.piece(4).dim(), 1);
    let report = ring.poincare_duality(4);
    t.claim(
        "pairings",
        if report.holds() {
            format!("nondegenerate, ranks {}", list(&report.pairing_ranks))
        } else {
            report.failures.join(", ")
        },
        "nondegenerate, ranks [1,1,2,1,1]",
        report.holds() && report.pairing_ranks == [1, 1, 2, 1, 1],
    );
    let det = ring.pairing_matrix(2, 4)?.determinant();
    t.check("det pairing R^2 x R^2", det, rat(36608, 12769));
    Ok(())
}

fn looijenga_vanishing(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let h = cfg.presentation.hilbert_function(8);
    t.check("dims R^5..R^8", list(&h[5..=8]), "[0,0,0,0]");
    Ok(())
}

fn low_genus_rings(_: &SuiteConfig, t: &mut Tally) -> R {
    for g in 2..=5u32 {
        let ring = RingPresentation::kappa_one_truncated(g)?;
        let mut expected = vec![1usize; (g - 1) as usize];
        expected.extend([0, 0]);
        t.check(&format!("g={g} hilbert"), list(&ring.hilbert_function(g)), list(&expected));
        t.check(&format!("g={g} duality"), ring.is_poincare_duality(g - 2), true);
    }
    Ok(())
}

fn plucker_lemma(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let dec = decompose_sym2_wedge2(5)?;
    t.check("Sym^2(wedge^2 C^5)", &dec, "S(2,2) + S(1,1,1,1)");
    let d22 = dim_schur(&Partition::new(vec![2, 2])?, 5);
    let d1111 = dim_schur(&Partition::new(vec![1, 1, 1, 1])?, 5);
    t.check("dims", format!("{d22}+{d1111}={}", &d22 + &d1111), format!("50+5={}", binomial(11, 2)));
    let d = cfg.trunc.max(5);
    let v = FormalBundle::generic("v", 5, d);
    let lhs = wedge_power(&v, 4)?;
    let rhs = twist(&dual(&v), &LineClass::new(v.c(1))?)?;
    t.claim(
        &format!("wedge^4 V vs V^dual(x)det V through degree {d}"),
        classes(&lhs),
        classes(&rhs),
        lhs == rhs,
    );
    Ok(())
}

fn mukai_bookkeeping(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let forms = forms_dim(5, 2);
    t.check("forms(5,2)", &forms, 21);
    let residual = &forms - binomial(5, 4);
    t.check("21 - 5", &residual, mukai_quadric_rank());
    t.check("dim G(4,10) + 16", BigInt::from(grass_dim(4, 10)?) + &residual, 40);
    let v = FormalBundle::generic("v", 5, cfg.trunc);
    let sym2 = sym_power(&v, 2)?.rank();
    t.check("rank Sym^2 V vs 4+6", sym2, 4 + 6);
    let wedge2 = wedge_power(&v, 2)?.rank();
    t.check("rank wedge^2 V vs 4+6", wedge2, 4 + 6);
    t.check("c_i(F) = 0 for i > 4 by Whitney round trip", fve_roundtrip(cfg.trunc)?, true);
    Ok(())
}

fn canonical_quadrics_check(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let d = cfg.trunc.max(1);
    for g in [6u32, 5, 4] {
        let formula = (g as i64 - 2) * (g as i64 - 3) / 2;
        let sym2 = binomial(g as i64 + 1, 2).to_i64().expect("small");
        let by_ranks = sym2 - omega_power_rank(2, g) as i64;
        let grr_rank = canonical_quadric_bundle(g, d)?.bundle.rank() as i64;
        t.check(
            &format!("g={g} formula,ranks,grr"),
            format!("{formula},{by_ranks},{grr_rank}"),
            format!("{0},{0},{0}", canonical_quadrics(g)?),
        );
    }
    Ok(())
}

fn maroni_adjunction(_: &SuiteConfig, t: &mut Tally) -> R {
    let (mut admissible, mut parity_failures, mut bad) = (0, 0, Vec::new());
    for g in 4..=12u32 {
        for n in 0..=g {
            let k = solve_scroll_coefficient(g, n);
            let same_parity = (g + n) % 2 == 0;
            if k.is_integer() != same_parity {
                bad.push(format!("({g},{n}) parity"));
                continue;
            }
            if !same_parity {
                parity_failures += 1;
                continue;
            }
            let closed = rat(g as i64 - 3 * n as i64 + 2, 2);
            if k != closed {
                bad.push(format!("({g},{n}) k={k}"));
            }
            let valid = 3 * n <= g + 2;
            if trigonal_maroni_valid(g, n) != valid {
                bad.push(format!("({g},{n}) bound"));
            }
            if valid {
                admissible += 1;
                let kk = k.to_integer().to_i64().expect("small");
                let genus = genus_of_class(&HirzebruchClass::from_sf(n, 3, kk));
                if genus != int(g as i64) {
                    bad.push(format!("({g},{n}) genus {genus}"));
                }
            }
        }
    }
    // admissible pairs: n = g mod 2, n <= (g+2)/3
    let expected_admissible: u32 = (4..=12u32)
        .map(|g| (0..=(g + 2) / 3).filter(|n| (g + n) % 2 == 0).count() as u32)
        .sum();
    let expected_parity: u32 = (4..=12u32).map(|g| (0..=g).filter(|n| (g + n) % 2 == 1).count() as u32).sum();
    t.check("admissible (g,n) with genus(3S+kF) = g", admissible, expected_admissible);
    t.check("parity failures detected", parity_failures, expected_parity);
    t.check("mismatches", list(&bad), "[]");
    Ok(())
}

fn strata_dimensions(_: &SuiteConfig, t: &mut Tally) -> R {
    let dims = |g| -> R<String> { Ok(list(&stratum_dimensions(g)?.iter().map(|s| s.dim).collect::<Vec<_>>())) };
    t.check("g=6", dims(6)?, "[15,13,12,11,10]");
    t.check("T_{6,2}", trigonal_stratum_dim(6, 2)?, 12);
    t.check("g=5", dims(5)?, "[12,11,9]");
    Ok(())
}

fn grr_constants(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let (g, d) = (6, cfg.trunc.max(2));
    let kt = kappa_table(d);
    let k = |s: &str| parse_poly(s, &kt);
    t.check("lambda_1 / kappa_1", lambda1_coefficient(g, d)?, rat(1, 12));
    let ch = chern_character(&hodge_bundle(g, d)?.bundle);
    t.check("ch_2(E)", &ch[2], k("-1/24*k2")?);
    let w2 = ch_pushforward_omega_power(2, g, d)?;
    t.check("ch_1(pi_* omega^2)", &w2[1], k("13/12*k1")?);
    t.check("rank pi_* omega^2", &w2[0], GradedPoly::constant(&kt, int(3 * g as i64 - 3)));
    Ok(())
}

fn sym_power_calculus(_: &SuiteConfig, t: &mut Tally) -> R {
    let w = FormalBundle::generic("w", 2, 3);
    let s = sym_power(&w, 2)?;
    let table = VariableTable::indexed("w", 2);
    let want: Vec<GradedPoly> = ["3*w1", "2*w1^2 + 4*w2", "4*w1*w2"]
        .iter()
        .map(|x| parse_poly(x, &table))
        .collect::<R<_>>()?;
    t.check("c(Sym^2 W)", classes(&s), list(&want));
    let h = solve_hyperelliptic_twist(6)?;
    t.check("w_1 (g=6)", &h.w1, "1/15 * l1");
    let sl = solve_sl_twist(5)?;
    t.check("c_1(L) (g=5)", &sl.line, "1/5 * l1");
    Ok(())
}

fn hodge_character(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let d = cfg.trunc.max(3);
    let kt = kappa_table(d);
    let ch = chern_character(&hodge_bundle(6, d)?.bundle);
    let want = ["6", "1/12*k1", "0", "-1/720*k3"]
        .iter()
        .map(|s| parse_poly(s, &kt))
        .collect::<R<Vec<_>>>()?;
    t.check("ch_0..ch_3(E), g=6", list(&ch[..4]), list(&want));
    let e = hodge_bundle(6, d.max(2))?.bundle;
    t.check("lambda_2", e.c(2), parse_poly("1/288*k1^2", &kt)?);
    Ok(())
}

fn fve_wedge_quotient(cfg: &SuiteConfig, t: &mut Tally) -> R {
    let d = cfg.trunc.max(1);
    let fi = fi_in_terms_of_vi(d)?;
    let table = fve_table(d)?;
    t.check("f_1", &fi.f[0], parse_poly("4*v1 - l1 - 6*ell", &table)?);
    t.check("rank wedge^2 V", fi.middle_rank, 10);
    Ok(())
}

fn trigonal_twist(_: &SuiteConfig, t: &mut Tally) -> R {
    for (g, n, want) in [(6, 0, [rat(1, 3), rat(-1, 24), rat(1, 8)]), (4, 0, [rat(1, 2), rat(-1, 8), rat(1, 2)])] {
        let s = solve_trigonal_twist(g, n, &int(0))?;
        t.check(&format!("(g,n)=({g},{n}) q,r,s at t=0"), list(&[s.q, s.r, s.s]), list(&want));
    }
    Ok(())
}

fn grassmann_degrees(_: &SuiteConfig, t: &mut Tally) -> R {
    let mut got = Vec::new();
    let mut want = Vec::new();
    for (k, n) in [(1u32, 4u32), (2, 4), (2, 5), (2, 6), (3, 6)] {
        got.push(plucker_degree(k, n)?);
        want.push(syt_count(&Partition::rectangle(k, n - k)));
    }
    t.check("deg G(k,n) for (1,4),(2,4),(2,5),(2,6),(3,6)", list(&got), list(&want));
    Ok(())
}

/// Every check of the suite, in definition order.
pub fn all_checks() -> &'static [Check] {
    use Provenance::*;
    &[
        Check {
            id: "m6-presentation",
            anchor: "R = Q[k1,k2]/(127 k1^3 - 2304 k1 k2, 113 k1^4 - 36864 k2^2) is a Poincare duality ring with socle in degree g-2 = 4",
            provenance: Derived,
            run: m6_presentation,
        },
        Check {
            id: "looijenga-vanishing",
            anchor: "R^i(M_g) = 0 for i > g-2, here g = 6",
            provenance: Literature,
            run: looijenga_vanishing,
        },
        Check {
            id: "low-genus-rings",
            anchor: "R*(M_g) = Q[k1]/(k1^(g-1)) for 2 <= g <= 5",
            provenance: Literature,
            run: low_genus_rings,
        },
        Check {
            id: "plucker-lemma",
            anchor: "Sym^2(wedge^2 V) = S_(2,2) V + wedge^4 V and wedge^4 V = V^dual (x) det V for rank V = 5",
            provenance: Literature,
            run: plucker_lemma,
        },
        Check {
            id: "mukai-bookkeeping",
            anchor: "dim Y = dim G(4, wedge^2 C^5) + (21 - 5) = 40; 0 -> F -> Sym^2 V -> E' -> 0 with rank F = 4, rank E' = 6",
            provenance: Literature,
            run: mukai_bookkeeping,
        },
        Check {
            id: "canonical-quadrics",
            anchor: "quadrics through a canonical curve: g(g+1)/2 - (3g-3) = (g-2)(g-3)/2",
            provenance: Literature,
            run: canonical_quadrics_check,
        },
        Check {
            id: "maroni-adjunction",
            anchor: "trigonal curves of genus g on F_n lie in |3S + kF| with k = (g-3n+2)/2, n = g mod 2, n <= (g+2)/3",
            provenance: Literature,
            run: maroni_adjunction,
        },
        Check {
            id: "strata-dimensions",
            anchor: "strata of M_6 of dimensions 15, 13, 12, 11, 10; T_{6,2} of dimension 12; strata of M_5 of dimensions 12, 11, 9",
            provenance: Literature,
            run: strata_dimensions,
        },
        Check {
            id: "grr-constants",
            anchor: "lambda_1 = k1/12, ch_2(E) = -k2/24, ch_1(pi_* omega^2) = 13 k1/12, rank pi_* omega^2 = 3g-3",
            provenance: Derived,
            run: grr_constants,
        },
        Check {
            id: "sym-power-calculus",
            anchor: "c(Sym^2 W) = 1 + 3w1 + (2w1^2 + 4w2) + 4w1w2; Sym^5 W = E gives w1 = l1/15; V (x) L = E with det V trivial gives c1(L) = l1/5",
            provenance: Literature,
            run: sym_power_calculus,
        },
        Check {
            id: "hodge-character",
            anchor: "derived oracle: pi_*(e^psi td) with td = sum B_n psi^n/n! gives ch(E) = 6 + k1/12 + 0 - k3/720 and lambda_2 = k1^2/288",
            provenance: Derived,
            run: hodge_character,
        },
        Check {
            id: "fve-wedge-quotient",
            anchor: "derived oracle: c(F) = c(wedge^2 V)/c(E (x) L') gives f1 = 4v1 - l1 - 6ell",
            provenance: Derived,
            run: fve_wedge_quotient,
        },
        Check {
            id: "trigonal-twist",
            anchor: "derived oracle: hand solution of the degree 1 and 2 Chern equations for (g,n) = (6,0), (4,0) with c1(M) = 0",
            provenance: Derived,
            run: trigonal_twist,
        },
        Check {
            id: "grassmann-degrees",
            anchor: "derived oracle: deg G(k,n) = #SYT of the k x (n-k) rectangle",
            provenance: Derived,
            run: grassmann_degrees,
        },
    ]
}
