//! Solving bundle isomorphisms for unknown Chern classes, degree by degree.
//!
//! Each solver sets up both sides with the unknowns as free variables,
//! reads off the linear equations in degrees 1 and 2, solves them, then
//! substitutes the solution back and checks that the two sides agree.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{direct_sum, sym_power, twist, FormalBundle, LineClass};
use crate::algebra::{binomial, int, GradedPoly, Rational, VariableTable};
use crate::error::{Error, Result};

/// `l1, l2`: the first two classes of the target bundle.
fn lambda_table() -> Arc<VariableTable> {
    VariableTable::new([("l1", 1), ("l2", 2)]).expect("static table")
}

fn lambda_bundle(rank: u32, table: &Arc<VariableTable>) -> Result<FormalBundle> {
    FormalBundle::new(
        rank,
        vec![GradedPoly::var(table, "l1")?, GradedPoly::var(table, "l2")?],
        table,
        2,
    )
}

fn coeff_of(p: &GradedPoly, var: &str, power: u32) -> Rational {
    let table = p.table();
    let mut e = vec![0; table.len()];
    e[table.index_of(var).expect("known variable")] = power;
    p.coeff(&e)
}

fn restrict(p: &GradedPoly, target: &Arc<VariableTable>) -> Result<GradedPoly> {
    let names = p.table().names();
    let mut images = Vec::with_capacity(names.len());
    for (j, n) in names.iter().enumerate() {
        match target.index_of(n) {
            Some(i) => images.push(GradedPoly::var_at(target, i)),
            None if p.terms().all(|(e, _)| e[j] == 0) => images.push(GradedPoly::zero(target)),
            None => return Err(Error::Inconsistent(format!("leftover unknown `{n}`"))),
        }
    }
    p.substitute(&images, None)
}

/// `W` of rank 2 with `Sym^{g-1} W = E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticTwist {
    pub genus: u32,
    /// `c_1(W)` in `l1`.
    pub w1: GradedPoly,
    /// `c_2(W)` in `l1, l2`.
    pub w2: GradedPoly,
}

pub fn solve_hyperelliptic_twist(g: u32) -> Result<HyperellipticTwist> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus {g} < 2")));
    }
    let lt = lambda_table();
    let wt = VariableTable::new([("w1", 1), ("w2", 2)])?;
    let w = FormalBundle::generic_in("w", 2, &wt, 2)?;
    let s = sym_power(&w, g - 1)?;
    debug_assert_eq!(s.rank(), g);
    let a = coeff_of(&s.c(1), "w1", 1);
    let a2 = coeff_of(&s.c(2), "w1", 2);
    let b = coeff_of(&s.c(2), "w2", 1);
    if a.is_zero() || b.is_zero() {
        return Err(Error::Inconsistent("degenerate hyperelliptic system".into()));
    }
    let l1 = GradedPoly::var(&lt, "l1")?;
    let l2 = GradedPoly::var(&lt, "l2")?;
    let w1 = l1.scale(&a.recip());
    let w2 = (&l2 - &(&w1 * &w1).scale(&a2)).scale(&b.recip());

    let solved = s.map_classes(|c| c.substitute(&[w1.clone(), w2.clone()], None))?;
    if solved != lambda_bundle(g, &lt)? {
        return Err(Error::Inconsistent("hyperelliptic solution does not check".into()));
    }
    Ok(HyperellipticTwist { genus: g, w1, w2 })
}

/// `k = (g - 3n + 2) / 2` for a trigonal curve of genus `g` on the
/// Hirzebruch surface `F_n`; fails when parity or the bound on `n` fails.
pub fn trigonal_scroll_index(g: u32, n: u32) -> Result<u32> {
    let twice = g as i64 - 3 * n as i64 + 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "no trigonal curve of genus {g} on F_{n}"
        )));
    }
    Ok((twice / 2) as u32)
}

/// Solution of `E ⊗ M = Sym^a V ⊕ (L ⊗ Sym^b V)` with `c(V) = 1 + β₂`,
/// `c_1(L) = α₁`, and the convention `c_1(M) = t·λ₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigonalTwist {
    pub genus: u32,
    pub maroni: u32,
    pub k: u32,
    pub a: u32,
    pub b: u32,
    /// Convention parameter: `c_1(M) = t·λ₁`.
    pub t: Rational,
    /// `α₁ = q·λ₁`.
    pub q: Rational,
    /// `β₂ = r·λ₁² + s·λ₂`.
    pub r: Rational,
    pub s: Rational,
}

pub fn solve_trigonal_twist(g: u32, n: u32, t: &Rational) -> Result<TrigonalTwist> {
    if g < 3 {
        return Err(Error::InvalidArgument(format!("genus {g} < 3 is not trigonal")));
    }
    let k = trigonal_scroll_index(g, n)?;
    let (a, b) = (2 * n + k - 2, n + k - 2);
    if a + b + 2 != g {
        return Err(Error::Inconsistent(format!("rank {} != {g}", a + b + 2)));
    }
    let table = VariableTable::new([("l1", 1), ("l2", 2), ("a1", 1), ("b2", 2)])?;
    let lt = lambda_table();
    let zero = GradedPoly::zero(&table);
    let v = FormalBundle::new(2, vec![zero, GradedPoly::var(&table, "b2")?], &table, 2)?;
    let alpha = LineClass::new(GradedPoly::var(&table, "a1")?)?;
    let rhs = direct_sum(&sym_power(&v, a)?, &twist(&sym_power(&v, b)?, &alpha)?)?;
    let m = LineClass::new(GradedPoly::var(&table, "l1")?.scale(t))?;
    let lhs = twist(&lambda_bundle(g, &table)?, &m)?;

    // degree 1: (b+1)·α₁ = (1 + g t)·λ₁
    let qa = coeff_of(&rhs.c(1), "a1", 1);
    if qa.is_zero() {
        return Err(Error::Inconsistent("α₁ does not appear in degree 1".into()));
    }
    let q = coeff_of(&lhs.c(1), "l1", 1) / &qa;
    // degree 2: P·α₁² + K·β₂ = c_2(lhs)
    let p = coeff_of(&rhs.c(2), "a1", 2);
    let kk = coeff_of(&rhs.c(2), "b2", 1);
    if kk.is_zero() {
        return Err(Error::Inconsistent("β₂ does not appear in degree 2".into()));
    }
    let r = (coeff_of(&lhs.c(2), "l1", 2) - &p * &q * &q) / &kk;
    let s = coeff_of(&lhs.c(2), "l2", 1) / &kk;

    let l1 = GradedPoly::var(&table, "l1")?;
    let l2 = GradedPoly::var(&table, "l2")?;
    let images = [
        l1.clone(),
        l2.clone(),
        l1.scale(&q),
        &(&l1 * &l1).scale(&r) + &l2.scale(&s),
    ];
    let back = |b: &FormalBundle| b.map_classes(|c| restrict(&c.substitute(&images, None)?, &lt));
    if back(&lhs)? != back(&rhs)? {
        return Err(Error::Inconsistent(format!(
            "trigonal system for g={g}, n={n} has no solution"
        )));
    }
    Ok(TrigonalTwist {
        genus: g,
        maroni: n,
        k,
        a,
        b,
        t: t.clone(),
        q,
        r,
        s,
    })
}

/// `V ⊗ L = E` with `det V` trivial: `c_1(L)` and `c_2(V)` in `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlTwist {
    pub rank: u32,
    pub line: GradedPoly,
    pub v2: GradedPoly,
}

pub fn solve_sl_twist(rank: u32) -> Result<SlTwist> {
    if rank < 2 {
        return Err(Error::InvalidArgument(format!("rank {rank} < 2")));
    }
    let table = VariableTable::new([("l1", 1), ("l2", 2), ("ell", 1), ("v2", 2)])?;
    let lt = lambda_table();
    let v = FormalBundle::new(
        rank,
        vec![GradedPoly::zero(&table), GradedPoly::var(&table, "v2")?],
        &table,
        2,
    )?;
    let tw = twist(&v, &LineClass::new(GradedPoly::var(&table, "ell")?)?)?;
    let c1 = coeff_of(&tw.c(1), "ell", 1);
    let ell2 = coeff_of(&tw.c(2), "ell", 2);
    let kv = coeff_of(&tw.c(2), "v2", 1);
    debug_assert_eq!(c1, int(rank as i64));
    debug_assert!(kv.is_one());
    let l1 = GradedPoly::var(&lt, "l1")?;
    let line = l1.scale(&c1.recip());
    let v2 = (&GradedPoly::var(&lt, "l2")? - &(&line * &line).scale(&ell2)).scale(&kv.recip());
    let expect_ell2 = Rational::from_integer(binomial(rank as i64, 2));
    if ell2 != expect_ell2 {
        return Err(Error::Inconsistent("twist coefficient mismatch".into()));
    }
    Ok(SlTwist { rank, line, v2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn lp(s: &str) -> GradedPoly {
        parse_poly(s, &lambda_table()).unwrap()
    }

    #[test]
    fn hyperelliptic_genus_two_is_identity() {
        let h = solve_hyperelliptic_twist(2).unwrap();
        assert_eq!(h.w1, lp("l1"));
        assert_eq!(h.w2, lp("l2"));
    }

    #[test]
    fn hyperelliptic_genus_six() {
        let h = solve_hyperelliptic_twist(6).unwrap();
        assert_eq!(h.w1, lp("l1/15"));
        // Sym^5 W roots (5-j)a + j b: c_2 = 85 w1^2 + 35 w2 by hand
        assert_eq!(h.w2, lp("(l2 - 85*l1^2/225)/35"));
        assert!(solve_hyperelliptic_twist(1).is_err());
    }

    #[test]
    fn hyperelliptic_first_class_general() {
        for g in 2..12 {
            let h = solve_hyperelliptic_twist(g).unwrap();
            let c = Rational::from_integer(binomial(g as i64, 2));
            assert_eq!(h.w1, lp("l1").scale(&c.recip()));
        }
    }

    #[test]
    fn trigonal_genus_six_flat() {
        let s = solve_trigonal_twist(6, 0, &rat(0, 1)).unwrap();
        assert_eq!((s.k, s.a, s.b), (4, 2, 2));
        assert_eq!(s.q, rat(1, 3));
        assert_eq!(s.r, rat(-1, 24));
        assert_eq!(s.s, rat(1, 8));
    }

    #[test]
    fn trigonal_genus_four_flat() {
        let s = solve_trigonal_twist(4, 0, &rat(0, 1)).unwrap();
        assert_eq!((s.k, s.a, s.b), (3, 1, 1));
        assert_eq!(s.q, rat(1, 2));
        assert_eq!(s.r, rat(-1, 8));
        assert_eq!(s.s, rat(1, 2));
    }

    #[test]
    fn trigonal_q_closed_form() {
        for (g, n) in [(5, 1), (6, 2), (7, 1), (8, 2), (9, 3), (10, 0)] {
            for t in [rat(0, 1), rat(1, 2), rat(-3, 7)] {
                let s = solve_trigonal_twist(g, n, &t).unwrap();
                let expect = (Rational::one() + int(g as i64) * &t) / int(s.b as i64 + 1);
                assert_eq!(s.q, expect);
            }
        }
    }

    #[test]
    fn trigonal_rejects_bad_maroni() {
        assert!(solve_trigonal_twist(6, 1, &rat(0, 1)).is_err());
        assert!(solve_trigonal_twist(6, 4, &rat(0, 1)).is_err());
        assert_eq!(trigonal_scroll_index(6, 2).unwrap(), 1);
    }

    #[test]
    fn sl_twist_genus_five() {
        let s = solve_sl_twist(5).unwrap();
        assert_eq!(s.line, lp("l1/5"));
        assert_eq!(s.v2, lp("l2 - 2/5*l1^2"));
    }
}
