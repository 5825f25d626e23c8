use tautring::grr::{
    ch_pushforward_omega_power, hodge_bundle, hodge_odd_character_sum, kappa_table,
    lambda1_coefficient, push_psi, PsiSeries,
};
use tautring::{int, parse_poly, rat};

#[test]
fn riemann_roch_ranks() {
    for g in 2..=8u32 {
        for k in 1..=4u32 {
            let ch = ch_pushforward_omega_power(k, g, 2).unwrap();
            let chi = k as i64 * (2 * g as i64 - 2) - g as i64 + 1;
            let expect = if k == 1 { chi + 1 } else { chi };
            assert_eq!(ch[0].as_constant(), Some(int(expect)), "g={g} k={k}");
        }
    }
}

#[test]
fn lambda_one_is_universal() {
    for g in 2..=10 {
        assert_eq!(lambda1_coefficient(g, 2).unwrap(), rat(1, 12));
    }
}

#[test]
fn dual_cancels_first_character() {
    for g in 2..=7 {
        assert!(hodge_odd_character_sum(g, 3).unwrap().is_zero());
    }
}

#[test]
fn hodge_second_class_two_ways() {
    for g in 2..=7 {
        let ch = ch_pushforward_omega_power(1, g, 2).unwrap();
        let by_hand = (&(&ch[1] * &ch[1]) - &ch[2].scale(&int(2))).scale(&rat(1, 2));
        assert_eq!(hodge_bundle(g, 2).unwrap().bundle.c(2), by_hand);
    }
}

#[test]
fn pushforward_is_linear_and_drops_degree() {
    let (g, d) = (6u32, 4u32);
    let t = kappa_table(d);
    let mut a = PsiSeries::zero(g, d);
    a.set_coeff(2, parse_poly("3*k1", &t).unwrap()).unwrap();
    a.set_coeff(3, parse_poly("-1/2", &t).unwrap()).unwrap();
    let mut b = PsiSeries::zero(g, d);
    b.set_coeff(1, parse_poly("k2 + k1^2", &t).unwrap()).unwrap();
    b.set_coeff(4, parse_poly("7", &t).unwrap()).unwrap();
    let sum = push_psi(&a.add(&b).unwrap());
    assert_eq!(sum, &push_psi(&a) + &push_psi(&b));
    assert_eq!(push_psi(&a.scale(&rat(2, 3))), push_psi(&a).scale(&rat(2, 3)));
    // 3κ1ψ^2 - ψ^3/2 has degree 3 and pushes to 3κ1^2 - κ2/2
    assert_eq!(push_psi(&a).homogeneous_degree().unwrap(), Some(2));
    assert_eq!(push_psi(&a), parse_poly("3*k1^2 - k2/2", &t).unwrap());
    assert_eq!(push_psi(&b), parse_poly("10*k2 + 10*k1^2 + 7*k3", &t).unwrap());
}
