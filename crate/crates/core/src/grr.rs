//! Formal Grothendieck-Riemann-Roch along the universal curve.
//!
//! Classes on the universal curve are truncated series in `ψ = c_1(ω)` with
//! coefficients in the κ-ring `Q[κ_1..κ_D]`. The fibre pushforward sends
//! `ψ^{a+1}` to `κ_a`, with `κ_0 = 2g - 2` and `ψ^0` to `0`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{bernoulli_numbers, factorial, int, GradedPoly, Rational, VariableTable};
use crate::chern::{
    chern_classes_from_character, dual, sequence_quotient, sequence_quotient_with_relations,
    direct_sum, twist, wedge_power, sym_power, FormalBundle, LineClass,
};
use crate::error::{Error, Result};

/// `k1..kD` with weights `1..D`.
pub fn kappa_table(trunc: u32) -> Arc<VariableTable> {
    VariableTable::indexed("k", trunc)
}

/// `sum_j coeff_j ψ^j` with `deg coeff_j + j <= D + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSeries {
    genus: u32,
    trunc: u32,
    coeffs: Vec<GradedPoly>,
}

impl PsiSeries {
    pub fn zero(genus: u32, trunc: u32) -> Self {
        let table = kappa_table(trunc);
        PsiSeries {
            genus,
            trunc,
            coeffs: vec![GradedPoly::zero(&table); trunc as usize + 2],
        }
    }

    pub fn one(genus: u32, trunc: u32) -> Self {
        Self::psi_power(genus, trunc, 0)
    }

    pub fn psi_power(genus: u32, trunc: u32, j: u32) -> Self {
        let mut s = Self::zero(genus, trunc);
        if j <= trunc + 1 {
            let table = Arc::clone(s.table());
            s.coeffs[j as usize] = GradedPoly::one(&table);
        }
        s
    }

    /// `sum_j (c_j ψ^j)` for rational constants `c_j`.
    pub fn from_constants(genus: u32, trunc: u32, cs: &[Rational]) -> Self {
        let mut s = Self::zero(genus, trunc);
        let table = Arc::clone(s.table());
        for (j, c) in cs.iter().enumerate().take(trunc as usize + 2) {
            s.coeffs[j] = GradedPoly::constant(&table, c.clone());
        }
        s
    }

    /// `e^{kψ}`.
    pub fn exp_psi(genus: u32, trunc: u32, k: i64) -> Self {
        let cs: Vec<Rational> = (0..=trunc + 1)
            .map(|j| Rational::new(BigInt::from(k).pow(j), factorial(j)))
            .collect();
        Self::from_constants(genus, trunc, &cs)
    }

    /// Todd class of the relative tangent bundle `ω^∨`:
    /// `-ψ/(1 - e^{ψ}) = sum_n B_n ψ^n / n!` with `B_1 = -1/2`.
    pub fn todd_relative(genus: u32, trunc: u32) -> Self {
        let b = bernoulli_numbers(trunc as usize + 1);
        let cs: Vec<Rational> = (0..=trunc + 1)
            .map(|n| &b[n as usize] / Rational::from_integer(factorial(n)))
            .collect();
        Self::from_constants(genus, trunc, &cs)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.coeffs[0].table()
    }

    pub fn coeff(&self, j: u32) -> &GradedPoly {
        &self.coeffs[j as usize]
    }

    /// Sets the coefficient of `ψ^j`, dropping terms beyond the truncation.
    pub fn set_coeff(&mut self, j: u32, c: GradedPoly) -> Result<()> {
        if j > self.trunc + 1 {
            return Ok(());
        }
        let c = c.embed(self.table())?;
        self.coeffs[j as usize] = c.truncate(self.trunc + 1 - j);
        Ok(())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus || self.trunc != other.trunc {
            return Err(Error::InvalidArgument(
                "ψ-series with different genus or truncation".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(PsiSeries {
            genus: self.genus,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let top = self.trunc + 1;
        let mut out = Self::zero(self.genus, self.trunc);
        for i in 0..=top {
            for j in 0..=top - i {
                let (a, b) = (&self.coeffs[i as usize], &other.coeffs[j as usize]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let p = a.truncated_mul(b, top - i - j)?;
                out.coeffs[(i + j) as usize] = &out.coeffs[(i + j) as usize] + &p;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PsiSeries {
            genus: self.genus,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }
}

/// Fibre pushforward `ψ^{a+1} -> κ_a`, `ψ -> 2g - 2`, `1 -> 0`.
pub fn push_psi(s: &PsiSeries) -> GradedPoly {
    let table = s.table();
    let mut out = GradedPoly::zero(table);
    for j in 1..=s.trunc + 1 {
        let c = s.coeff(j);
        if c.is_zero() {
            continue;
        }
        let kappa = if j == 1 {
            GradedPoly::constant(table, int(2 * s.genus as i64 - 2))
        } else {
            GradedPoly::var_at(table, j as usize - 2)
        };
        out = &out + &(c * &kappa);
    }
    out
}

/// `ch_0..ch_D` of `π_* ω^{⊗k}` via `π_*(e^{kψ} td)`, plus the trivial
/// `R^1 π_* ω` when `k = 1`.
pub fn ch_pushforward_omega_power(k: u32, g: u32, trunc: u32) -> Result<Vec<GradedPoly>> {
    if k < 1 || g < 2 {
        return Err(Error::InvalidArgument(format!(
            "π_*ω^{k} needs k >= 1 and g >= 2 (g = {g})"
        )));
    }
    let integrand = PsiSeries::exp_psi(g, trunc, k as i64).mul(&PsiSeries::todd_relative(g, trunc))?;
    let pushed = push_psi(&integrand);
    let mut ch: Vec<GradedPoly> = (0..=trunc).map(|d| pushed.component(d)).collect();
    if k == 1 {
        ch[0] = &ch[0] + &GradedPoly::one(pushed.table());
    }
    Ok(ch)
}

/// `rank π_* ω^{⊗k}`: `g` for `k = 1`, `(2k - 1)(g - 1)` otherwise.
pub fn omega_power_rank(k: u32, g: u32) -> u32 {
    if k == 1 {
        g
    } else {
        (2 * k - 1) * (g - 1)
    }
}

/// A bundle whose Chern classes live in the free κ-ring, together with the
/// classes above its rank, which are relations there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaBundle {
    pub bundle: FormalBundle,
    pub relations: Vec<GradedPoly>,
}

/// `π_* ω^{⊗k}` as a formal bundle over the κ-ring.
pub fn pushforward_omega_power(k: u32, g: u32, trunc: u32) -> Result<KappaBundle> {
    let ch = ch_pushforward_omega_power(k, g, trunc)?;
    let rank = omega_power_rank(k, g);
    if ch[0].as_constant() != Some(int(rank as i64)) {
        return Err(Error::Inconsistent(format!(
            "ch_0 = {} but rank is {rank}",
            ch[0]
        )));
    }
    let mut classes = chern_classes_from_character(&ch, trunc)?;
    let relations = if (rank as usize) < classes.len() {
        classes.split_off(rank as usize)
    } else {
        Vec::new()
    };
    let table = Arc::clone(ch[0].table());
    let bundle = FormalBundle::new(rank, classes, &table, trunc)?;
    Ok(KappaBundle { bundle, relations })
}

/// The Hodge bundle `E = π_* ω`; its Chern classes define `λ_i`.
pub fn hodge_bundle(g: u32, trunc: u32) -> Result<KappaBundle> {
    pushforward_omega_power(1, g, trunc)
}

/// `G` in `0 -> G -> Sym^2 π_*ω -> π_*ω^{⊗2} -> 0`, i.e. the quadrics
/// containing the canonical curve: `c(G) = c(Sym^2 E) / c(π_*ω^2)`,
/// computed as the kernel by `c(E_2) c(G) = c(Sym^2 E)`.
pub fn canonical_quadric_bundle(g: u32, trunc: u32) -> Result<KappaBundle> {
    let e = hodge_bundle(g, trunc)?;
    let w2 = pushforward_omega_power(2, g, trunc)?;
    let s2 = sym_power(&e.bundle, 2)?;
    let (gb, mut relations) = sequence_quotient_with_relations(&s2, &w2.bundle)?;
    relations.extend(e.relations);
    relations.extend(w2.relations);
    Ok(KappaBundle {
        bundle: gb,
        relations,
    })
}

/// Middle term of the exact sequence `0 -> F -> ? -> E' -> 0` on the Mukai
/// locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FveMiddle {
    Wedge2,
    Sym2,
}

/// `f_1..f_4` of `c(F) = c(M)/c(E ⊗ L')` with `M = ∧^2 V` (or `Sym^2 V`),
/// in `v1..v5`, `l1..lD` and `ell = c_1(L')`, plus the classes `f_5..f_D`,
/// which vanish only modulo the relations of the moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiExpressions {
    pub middle: FveMiddle,
    pub middle_rank: u32,
    pub f: Vec<GradedPoly>,
    pub excess: Vec<GradedPoly>,
}

pub fn fve_table(trunc: u32) -> Result<Arc<VariableTable>> {
    let mut vars: Vec<(String, u32)> = (1..=5).map(|i| (format!("v{i}"), i)).collect();
    vars.extend((1..=trunc.min(6)).map(|i| (format!("l{i}"), i)));
    vars.push(("ell".into(), 1));
    VariableTable::new(vars)
}

fn fve_parts(trunc: u32) -> Result<(FormalBundle, FormalBundle)> {
    let table = fve_table(trunc)?;
    let v = FormalBundle::generic_in("v", 5, &table, trunc)?;
    let e = FormalBundle::generic_in("l", 6, &table, trunc)?;
    let ell = LineClass::new(GradedPoly::var(&table, "ell")?)?;
    Ok((v, twist(&e, &ell)?))
}

pub fn fi_in_terms_of_vi_with(middle: FveMiddle, trunc: u32) -> Result<FiExpressions> {
    let (v, eprime) = fve_parts(trunc)?;
    let m = match middle {
        FveMiddle::Wedge2 => wedge_power(&v, 2)?,
        FveMiddle::Sym2 => sym_power(&v, 2)?,
    };
    if m.rank() != 4 + eprime.rank() {
        return Err(Error::Inconsistent(format!(
            "rank {} of the middle term is not 4 + {}",
            m.rank(),
            eprime.rank()
        )));
    }
    // c(F) = c(M) / c(E'), with F of rank 4
    let (f, excess) = sequence_quotient_with_relations(&m, &eprime)?;
    Ok(FiExpressions {
        middle,
        middle_rank: m.rank(),
        f: (1..=4.min(trunc)).map(|i| f.c(i)).collect(),
        excess,
    })
}

/// `f_1..f_4` through `0 -> F -> ∧^2 V -> E ⊗ L' -> 0`.
pub fn fi_in_terms_of_vi(trunc: u32) -> Result<FiExpressions> {
    fi_in_terms_of_vi_with(FveMiddle::Wedge2, trunc)
}

/// Whitney round trip: with `F` of rank 4 given by `f_1..f_4`, reassembling
/// `E' ⊕ F` and dividing by `c(F)` returns `c(E')` with nothing above rank 6.
pub fn fve_roundtrip(trunc: u32) -> Result<bool> {
    let (_, eprime) = fve_parts(trunc)?;
    let table = eprime.table().union(&VariableTable::indexed("f", 4))?;
    let eprime = eprime.embed(&table)?;
    let f = FormalBundle::generic_in("f", 4, &table, trunc)?;
    let total = direct_sum(&eprime, &f)?;
    Ok(sequence_quotient(&total, &f)? == eprime)
}

/// `ch(E) + ch(E^∨)` in degree 1, which vanishes for every bundle.
pub fn hodge_odd_character_sum(g: u32, trunc: u32) -> Result<GradedPoly> {
    let e = hodge_bundle(g, trunc)?.bundle;
    let a = crate::chern::chern_character(&e);
    let b = crate::chern::chern_character(&dual(&e));
    Ok(&a[1] + &b[1])
}

/// Coefficient of `κ_1` in `λ_1`.
pub fn lambda1_coefficient(g: u32, trunc: u32) -> Result<Rational> {
    let e = hodge_bundle(g, trunc.max(1))?;
    let c1 = e.bundle.c(1);
    let mut exps = vec![0; c1.table().len()];
    exps[0] = 1;
    let coeff = c1.coeff(&exps);
    if !(&c1 - &GradedPoly::var_at(c1.table(), 0).scale(&coeff)).is_zero() {
        return Err(Error::Inconsistent(format!("λ_1 = {c1} is not a multiple of κ_1")));
    }
    Ok(coeff)
}

/// Rank of the quotient `π_*ω^{⊗2}` computed from the Chern character.
pub fn omega_square_rank(g: u32) -> Result<Rational> {
    let ch = ch_pushforward_omega_power(2, g, 1)?;
    ch[0]
        .as_constant()
        .ok_or_else(|| Error::Inconsistent("ch_0 is not constant".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn kp(s: &str, d: u32) -> GradedPoly {
        parse_poly(s, &kappa_table(d)).unwrap()
    }

    #[test]
    fn pushforward_basics() {
        let (g, d) = (6, 4);
        assert_eq!(push_psi(&PsiSeries::psi_power(g, d, 2)), kp("k1", d));
        assert_eq!(push_psi(&PsiSeries::psi_power(g, d, 1)), kp("10", d));
        assert_eq!(push_psi(&PsiSeries::one(g, d)), kp("0", d));
        assert_eq!(push_psi(&PsiSeries::psi_power(g, d, 5)), kp("k4", d));
    }

    #[test]
    fn todd_series() {
        let td = PsiSeries::todd_relative(6, 3);
        let cs: Vec<Rational> = (0..5).map(|j| td.coeff(j).constant_term()).collect();
        assert_eq!(cs, vec![rat(1, 1), rat(-1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)]);
    }

    #[test]
    fn hodge_character() {
        let ch = ch_pushforward_omega_power(1, 6, 4).unwrap();
        assert_eq!(ch[0], kp("6", 4));
        assert_eq!(ch[1], kp("k1/12", 4));
        // ψ^3 coefficient of e^ψ td is 1/6 - 1/4 + 1/12 = 0
        assert_eq!(ch[2], kp("0", 4));
        assert_eq!(ch[3], kp("-k3/720", 4));
        assert_eq!(ch[4], kp("0", 4));
    }

    #[test]
    fn bicanonical_character() {
        let ch = ch_pushforward_omega_power(2, 6, 2).unwrap();
        assert_eq!(ch[0], kp("15", 2));
        assert_eq!(ch[1], kp("13*k1/12", 2));
        assert_eq!(omega_square_rank(5).unwrap(), int(12));
    }

    #[test]
    fn lambda_classes() {
        let e = hodge_bundle(6, 2).unwrap();
        assert_eq!(e.bundle.rank(), 6);
        assert_eq!(e.bundle.c(1), kp("k1/12", 2));
        // c_2 = (ch_1^2 - 2 ch_2)/2 with ch_2 = 0
        assert_eq!(e.bundle.c(2), kp("k1^2/288", 2));
        assert!(e.relations.is_empty());
        assert_eq!(hodge_bundle(2, 2).unwrap().bundle.rank(), 2);
        assert_eq!(lambda1_coefficient(9, 3).unwrap(), rat(1, 12));
    }

    #[test]
    fn hodge_relations_above_rank() {
        let e = hodge_bundle(2, 4).unwrap();
        assert_eq!(e.relations.len(), 2);
        assert!(e.relations.iter().any(|r| !r.is_zero()));
    }

    #[test]
    fn quadric_bundle_rank() {
        let gq = canonical_quadric_bundle(6, 4).unwrap();
        assert_eq!(gq.bundle.rank(), 6);
        let q5 = canonical_quadric_bundle(5, 2).unwrap();
        assert_eq!(q5.bundle.rank(), 3);
    }

    #[test]
    fn fve_wedge() {
        let f = fi_in_terms_of_vi(4).unwrap();
        assert_eq!(f.middle_rank, 10);
        let t = fve_table(4).unwrap();
        assert_eq!(f.f[0], parse_poly("4*v1 - l1 - 6*ell", &t).unwrap());
        assert!(f.excess.is_empty());
        assert!(fve_roundtrip(6).unwrap());
    }

    #[test]
    fn fve_excess_is_nonzero_in_free_ring() {
        let f = fi_in_terms_of_vi(5).unwrap();
        assert_eq!(f.excess.len(), 1);
        assert!(!f.excess[0].is_zero());
    }

    #[test]
    fn fve_sym2_rank_mismatch() {
        assert!(matches!(
            fi_in_terms_of_vi_with(FveMiddle::Sym2, 4),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn dual_character_cancels() {
        assert!(hodge_odd_character_sum(6, 3).unwrap().is_zero());
    }
}
