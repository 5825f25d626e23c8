//! Formal vector bundles given by a rank and truncated total Chern class.
//!
//! Every class lives in a [`GradedPoly`] ring in which `c_i` has degree `i`.
//! Only `c_1..c_D` are tracked, `D` being the truncation order of the bundle.
//! When `rank < D` the classes `c_i`, `i > rank`, are required to vanish
//! exactly; operations that would produce nonzero classes there fail with
//! [`Error::ExcessChernClass`] unless the caller explicitly asks for the
//! excess as relations.

mod roots;
mod solve;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{bernoulli_numbers, binomial, factorial, GradedPoly, Rational, VariableTable};
use crate::error::{Error, Result};
use roots::{elementary_table, universal_formula, Construction, ROOT_COUNT_GUARD};

pub use solve::{
    solve_hyperelliptic_twist, solve_sl_twist, solve_trigonal_twist, HyperellipticTwist, SlTwist,
    TrigonalTwist,
};

/// Default truncation order: the socle degree of the tautological ring of `M_6`.
pub const DEFAULT_TRUNCATION: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalBundle {
    rank: u32,
    /// `chern[i]` is `c_{i+1}`; always exactly `trunc` entries.
    chern: Vec<GradedPoly>,
    table: Arc<VariableTable>,
}

/// First Chern class of a line bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineClass(GradedPoly);

impl LineClass {
    pub fn new(c1: GradedPoly) -> Result<Self> {
        match c1.homogeneous_degree()? {
            None | Some(1) => Ok(LineClass(c1)),
            Some(d) => Err(Error::WrongDegree { expected: 1, found: d }),
        }
    }

    pub fn zero(table: &Arc<VariableTable>) -> Self {
        LineClass(GradedPoly::zero(table))
    }

    pub fn c1(&self) -> &GradedPoly {
        &self.0
    }
}

impl FormalBundle {
    /// Bundle with the given `c_1, c_2, ...`; missing classes up to `trunc`
    /// are zero and classes beyond `trunc` are dropped.
    pub fn new(
        rank: u32,
        classes: Vec<GradedPoly>,
        table: &Arc<VariableTable>,
        trunc: u32,
    ) -> Result<Self> {
        let mut chern = Vec::with_capacity(trunc as usize);
        for (i, c) in classes.into_iter().enumerate().take(trunc as usize) {
            let c = c.embed(table)?;
            let d = i as u32 + 1;
            if let Some(found) = c.homogeneous_degree()? {
                if found != d {
                    return Err(Error::WrongDegree { expected: d, found });
                }
            }
            chern.push(c);
        }
        while chern.len() < trunc as usize {
            chern.push(GradedPoly::zero(table));
        }
        let b = FormalBundle {
            rank,
            chern,
            table: Arc::clone(table),
        };
        b.check_rank()?;
        Ok(b)
    }

    /// Rank-`rank` bundle with Chern classes the free variables
    /// `{prefix}1..{prefix}m` of `table`, `m = min(rank, trunc)`.
    pub fn generic_in(
        prefix: &str,
        rank: u32,
        table: &Arc<VariableTable>,
        trunc: u32,
    ) -> Result<Self> {
        let classes = (1..=rank.min(trunc))
            .map(|i| GradedPoly::var(table, &format!("{prefix}{i}")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, classes, table, trunc)
    }

    /// Generic bundle over its own table `{prefix}1..{prefix}m`.
    pub fn generic(prefix: &str, rank: u32, trunc: u32) -> Self {
        let table = VariableTable::indexed(prefix, rank.min(trunc));
        Self::generic_in(prefix, rank, &table, trunc).expect("generic classes are well formed")
    }

    pub fn trivial(rank: u32, table: &Arc<VariableTable>, trunc: u32) -> Self {
        Self::new(rank, vec![], table, trunc).expect("trivial bundle")
    }

    pub fn line(c1: &LineClass, trunc: u32) -> Self {
        Self::new(1, vec![c1.0.clone()], c1.0.table(), trunc).expect("line bundle")
    }

    fn check_rank(&self) -> Result<()> {
        for (i, c) in self.chern.iter().enumerate() {
            let d = i as u32 + 1;
            if d > self.rank && !c.is_zero() {
                return Err(Error::ExcessChernClass {
                    rank: self.rank,
                    degree: d,
                });
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn trunc(&self) -> u32 {
        self.chern.len() as u32
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// `c_i`, with `c_0 = 1` and zero beyond the truncation.
    pub fn c(&self, i: u32) -> GradedPoly {
        match i {
            0 => GradedPoly::one(&self.table),
            i if i as usize <= self.chern.len() => self.chern[i as usize - 1].clone(),
            _ => GradedPoly::zero(&self.table),
        }
    }

    pub fn chern_classes(&self) -> &[GradedPoly] {
        &self.chern
    }

    /// `1 + c_1 + ... + c_D`.
    pub fn total_class(&self) -> GradedPoly {
        self.chern
            .iter()
            .fold(GradedPoly::one(&self.table), |acc, c| &acc + c)
    }

    pub fn embed(&self, table: &Arc<VariableTable>) -> Result<Self> {
        Ok(FormalBundle {
            rank: self.rank,
            chern: self
                .chern
                .iter()
                .map(|c| c.embed(table))
                .collect::<Result<_>>()?,
            table: Arc::clone(table),
        })
    }

    pub fn with_trunc(&self, trunc: u32) -> Self {
        let mut chern: Vec<GradedPoly> = self.chern.iter().take(trunc as usize).cloned().collect();
        while chern.len() < trunc as usize {
            // classes above the old truncation are unknown only if rank allows them
            chern.push(GradedPoly::zero(&self.table));
        }
        FormalBundle {
            rank: self.rank,
            chern,
            table: Arc::clone(&self.table),
        }
    }

    /// Applies a ring map to every Chern class.
    pub fn map_classes(&self, f: impl Fn(&GradedPoly) -> Result<GradedPoly>) -> Result<Self> {
        let chern: Vec<GradedPoly> = self.chern.iter().map(f).collect::<Result<_>>()?;
        let table = chern
            .first()
            .map(|c| Arc::clone(c.table()))
            .unwrap_or_else(|| Arc::clone(&self.table));
        Self::new(self.rank, chern, &table, self.trunc())
    }
}

/// Brings two bundles (or a bundle and a class) onto a common table and
/// truncation order.
fn unify(a: &FormalBundle, b: &FormalBundle) -> Result<(FormalBundle, FormalBundle)> {
    let table = a.table.union(&b.table)?;
    let trunc = a.trunc().min(b.trunc());
    Ok((
        a.embed(&table)?.with_trunc(trunc),
        b.embed(&table)?.with_trunc(trunc),
    ))
}

/// Degree-by-degree coefficients of a product of total classes.
fn multiply_series(a: &[GradedPoly], b: &[GradedPoly], table: &Arc<VariableTable>, trunc: u32) -> Vec<GradedPoly> {
    let coeff = |s: &[GradedPoly], i: usize| -> GradedPoly {
        if i == 0 {
            GradedPoly::one(table)
        } else {
            s.get(i - 1).cloned().unwrap_or_else(|| GradedPoly::zero(table))
        }
    };
    (1..=trunc as usize)
        .map(|k| {
            (0..=k).fold(GradedPoly::zero(table), |acc, i| {
                &acc + &(&coeff(a, i) * &coeff(b, k - i))
            })
        })
        .collect()
}

/// Degree-`1..=trunc` parts of `(1 + a_1 + ...) / (1 + b_1 + ...)`.
fn divide_series(a: &[GradedPoly], b: &[GradedPoly], table: &Arc<VariableTable>, trunc: u32) -> Vec<GradedPoly> {
    let get = |s: &[GradedPoly], i: usize| s.get(i - 1).cloned().unwrap_or_else(|| GradedPoly::zero(table));
    let mut q: Vec<GradedPoly> = Vec::with_capacity(trunc as usize);
    for k in 1..=trunc as usize {
        let mut qk = get(a, k);
        for i in 1..=k {
            let prev = if k == i { GradedPoly::one(table) } else { q[k - i - 1].clone() };
            qk = &qk - &(&get(b, i) * &prev);
        }
        q.push(qk);
    }
    q
}

/// Dual bundle: `c_i -> (-1)^i c_i`.
pub fn dual(b: &FormalBundle) -> FormalBundle {
    FormalBundle {
        rank: b.rank,
        chern: b
            .chern
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect(),
        table: Arc::clone(&b.table),
    }
}

/// `b ⊗ L`: `c_k = sum_i C(r - i, k - i) c_i t^(k-i)`.
pub fn twist(b: &FormalBundle, t: &LineClass) -> Result<FormalBundle> {
    let table = b.table.union(t.0.table())?;
    let b = b.embed(&table)?;
    let t = t.0.embed(&table)?;
    let r = b.rank as i64;
    let mut t_pows = vec![GradedPoly::one(&table)];
    for _ in 0..b.trunc() {
        let next = t_pows.last().unwrap() * &t;
        t_pows.push(next);
    }
    let chern = (1..=b.trunc())
        .map(|k| {
            (0..=k).fold(GradedPoly::zero(&table), |acc, i| {
                let coef = Rational::from_integer(binomial(r - i as i64, (k - i) as i64));
                &acc + &(&b.c(i) * &t_pows[(k - i) as usize]).scale(&coef)
            })
        })
        .collect();
    let out = FormalBundle {
        rank: b.rank,
        chern,
        table,
    };
    out.check_rank()?;
    Ok(out)
}

/// Whitney sum.
pub fn direct_sum(a: &FormalBundle, b: &FormalBundle) -> Result<FormalBundle> {
    let (a, b) = unify(a, b)?;
    let trunc = a.trunc();
    let chern = multiply_series(&a.chern, &b.chern, &a.table, trunc);
    FormalBundle::new(a.rank + b.rank, chern, &a.table, trunc)
}

fn construct(b: &FormalBundle, construction: Construction, rank: u32) -> Result<FormalBundle> {
    let trunc = b.trunc();
    let formula = universal_formula(construction, b.rank, trunc)?;
    let images: Vec<GradedPoly> = (1..=elementary_table(b.rank, trunc).len() as u32)
        .map(|i| b.c(i))
        .collect();
    let chern = formula
        .iter()
        .map(|f| {
            if images.is_empty() {
                Ok(GradedPoly::constant(&b.table, f.constant_term()))
            } else {
                f.substitute(&images, Some(trunc))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FormalBundle::new(rank, chern, &b.table, trunc)
}

/// `Sym^k b` through the Chern roots `x_{i_1} + ... + x_{i_k}`.
pub fn sym_power(b: &FormalBundle, k: u32) -> Result<FormalBundle> {
    let rank = binomial(b.rank as i64 + k as i64 - 1, k as i64);
    let rank: u64 = rank.try_into().unwrap_or(u64::MAX);
    if rank > ROOT_COUNT_GUARD {
        return Err(Error::Guard(format!("Sym^{k} of rank {} has rank {rank}", b.rank)));
    }
    if b.rank == 0 {
        return Ok(FormalBundle::trivial(rank as u32, &b.table, b.trunc()));
    }
    construct(b, Construction::Sym(k), rank as u32)
}

/// `∧^k b` through the Chern roots `x_{i_1} + ... + x_{i_k}`, `i_1 < ... < i_k`.
pub fn wedge_power(b: &FormalBundle, k: u32) -> Result<FormalBundle> {
    if k > b.rank {
        return Err(Error::WedgeOutOfRange { k, rank: b.rank });
    }
    let rank: u64 = binomial(b.rank as i64, k as i64).try_into().unwrap_or(u64::MAX);
    if rank > ROOT_COUNT_GUARD {
        return Err(Error::Guard(format!("∧^{k} of rank {} has rank {rank}", b.rank)));
    }
    if k == 0 {
        return Ok(FormalBundle::trivial(1, &b.table, b.trunc()));
    }
    construct(b, Construction::Wedge(k), rank as u32)
}

/// Determinant line bundle.
pub fn determinant(b: &FormalBundle) -> FormalBundle {
    FormalBundle::new(1, vec![b.c(1)], &b.table, b.trunc()).expect("degree-1 class")
}

/// Tensor product, through `ch(a ⊗ b) = ch(a) ch(b)`.
pub fn tensor(a: &FormalBundle, b: &FormalBundle) -> Result<FormalBundle> {
    let (a, b) = unify(a, b)?;
    let trunc = a.trunc();
    let cha = chern_character(&a);
    let chb = chern_character(&b);
    let ch: Vec<GradedPoly> = (0..=trunc as usize)
        .map(|k| {
            (0..=k).fold(GradedPoly::zero(&a.table), |acc, i| &acc + &(&cha[i] * &chb[k - i]))
        })
        .collect();
    chern_from_character(&ch, a.rank * b.rank, trunc)
}

/// Quotient `Q` in `0 -> sub -> total -> Q -> 0`, with `c(Q) = c(total)/c(sub)`.
/// Fails if `c_i(Q)` is nonzero for some `rank(Q) < i <= D`.
pub fn sequence_quotient(total: &FormalBundle, sub: &FormalBundle) -> Result<FormalBundle> {
    let (q, excess) = sequence_quotient_with_relations(total, sub)?;
    match excess.iter().position(|c| !c.is_zero()) {
        Some(i) => Err(Error::ExcessChernClass {
            rank: q.rank,
            degree: q.rank + 1 + i as u32,
        }),
        None => Ok(q),
    }
}

/// Like [`sequence_quotient`], but returns the classes `c_i(Q)` with
/// `rank(Q) < i <= D` instead of failing. In a ring where the sequence
/// exists these are relations.
pub fn sequence_quotient_with_relations(
    total: &FormalBundle,
    sub: &FormalBundle,
) -> Result<(FormalBundle, Vec<GradedPoly>)> {
    if sub.rank > total.rank {
        return Err(Error::RankUnderflow {
            sub: sub.rank,
            total: total.rank,
        });
    }
    let (t, s) = unify(total, sub)?;
    let rank = t.rank - s.rank;
    let trunc = t.trunc();
    let mut chern = divide_series(&t.chern, &s.chern, &t.table, trunc);
    let excess = if (rank as usize) < chern.len() {
        chern.split_off(rank as usize)
    } else {
        Vec::new()
    };
    let q = FormalBundle::new(rank, chern, &t.table, trunc)?;
    Ok((q, excess))
}

/// Power sums `p_1..p_D` of the Chern roots, by Newton's identities.
pub fn power_sums(b: &FormalBundle) -> Vec<GradedPoly> {
    let mut p: Vec<GradedPoly> = Vec::with_capacity(b.trunc() as usize);
    for k in 1..=b.trunc() {
        let mut pk = b.c(k).scale(&Rational::from_integer(BigInt::from(k)));
        if k % 2 == 0 {
            pk = -&pk;
        }
        for i in 1..k {
            let term = &b.c(i) * &p[(k - i - 1) as usize];
            pk = if i % 2 == 1 { &pk + &term } else { &pk - &term };
        }
        p.push(pk);
    }
    p
}

/// `ch_0..ch_D` with `ch_0 = rank` and `ch_k = p_k / k!`.
pub fn chern_character(b: &FormalBundle) -> Vec<GradedPoly> {
    let mut ch = vec![GradedPoly::constant(&b.table, Rational::from_integer(b.rank.into()))];
    for (k, pk) in power_sums(b).into_iter().enumerate() {
        ch.push(pk.scale(&Rational::new(BigInt::one(), factorial(k as u32 + 1))));
    }
    ch
}

/// `c_1..c_D` from `ch_1..ch_D` by Newton's identities, ignoring rank.
pub fn chern_classes_from_character(ch: &[GradedPoly], trunc: u32) -> Result<Vec<GradedPoly>> {
    let table = ch
        .first()
        .map(|c| Arc::clone(c.table()))
        .ok_or_else(|| Error::InvalidArgument("empty Chern character".into()))?;
    let p: Vec<GradedPoly> = (1..=trunc)
        .map(|k| {
            ch.get(k as usize)
                .map(|c| c.embed(&table).map(|c| c.scale(&Rational::from_integer(factorial(k)))))
                .unwrap_or_else(|| Ok(GradedPoly::zero(&table)))
        })
        .collect::<Result<_>>()?;
    let mut e: Vec<GradedPoly> = vec![GradedPoly::one(&table)];
    for k in 1..=trunc as usize {
        let mut acc = GradedPoly::zero(&table);
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    e.remove(0);
    Ok(e)
}

/// Bundle with the given Chern character; `ch[0]` must equal `rank`.
pub fn chern_from_character(ch: &[GradedPoly], rank: u32, trunc: u32) -> Result<FormalBundle> {
    let ch0 = ch
        .first()
        .and_then(|c| c.as_constant())
        .ok_or_else(|| Error::InvalidArgument("ch_0 must be a constant".into()))?;
    if ch0 != Rational::from_integer(rank.into()) {
        return Err(Error::InvalidArgument(format!("ch_0 = {ch0} but rank is {rank}")));
    }
    let classes = chern_classes_from_character(ch, trunc)?;
    FormalBundle::new(rank, classes, ch[0].table(), trunc)
}

/// Todd class `td_0..td_D`, from
/// `log td = p_1/2 - sum_{m>=1} B_{2m} p_{2m} / (2m (2m)!)`.
pub fn todd_class(b: &FormalBundle) -> Vec<GradedPoly> {
    let trunc = b.trunc();
    let p = power_sums(b);
    let bern = bernoulli_numbers(trunc as usize);
    let mut log = GradedPoly::zero(&b.table);
    for n in 1..=trunc {
        let coef = if n == 1 {
            Rational::new(BigInt::one(), BigInt::from(2))
        } else if n % 2 == 0 {
            -bern[n as usize].clone()
                / Rational::from_integer(BigInt::from(n) * factorial(n))
        } else {
            Rational::zero()
        };
        if !coef.is_zero() {
            log = &log + &p[n as usize - 1].scale(&coef);
        }
    }
    let series = exp_series(&log, trunc);
    (0..=trunc).map(|d| series.component(d)).collect()
}

/// `exp(x)` truncated at degree `trunc`, for `x` without constant term.
fn exp_series(x: &GradedPoly, trunc: u32) -> GradedPoly {
    let mut out = GradedPoly::one(x.table());
    let mut term = GradedPoly::one(x.table());
    for n in 1..=trunc {
        term = term
            .truncated_mul(x, trunc)
            .expect("same table")
            .scale(&Rational::new(BigInt::one(), BigInt::from(n)));
        out = &out + &term;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn table() -> Arc<VariableTable> {
        VariableTable::new([
            ("w1", 1),
            ("w2", 2),
            ("v1", 1),
            ("v2", 2),
            ("v3", 3),
            ("v4", 4),
            ("v5", 5),
            ("t", 1),
            ("x", 1),
        ])
        .unwrap()
    }

    fn p(s: &str) -> GradedPoly {
        parse_poly(s, &table()).unwrap()
    }

    fn w(trunc: u32) -> FormalBundle {
        FormalBundle::generic_in("w", 2, &table(), trunc).unwrap()
    }

    fn v(trunc: u32) -> FormalBundle {
        FormalBundle::generic_in("v", 5, &table(), trunc).unwrap()
    }

    #[test]
    fn dual_signs() {
        let d = dual(&w(2));
        assert_eq!(d.c(1), p("-w1"));
        assert_eq!(d.c(2), p("w2"));
        assert_eq!(dual(&d), w(2));
        assert_eq!(dual(&v(4)).c(1), p("-v1"));
    }

    #[test]
    fn twist_rank_two() {
        let t = LineClass::new(p("t")).unwrap();
        let b = twist(&w(2), &t).unwrap();
        assert_eq!(b.c(1), p("w1 + 2*t"));
        assert_eq!(b.c(2), p("w2 + w1*t + t^2"));
        assert_eq!(twist(&w(2), &LineClass::zero(&table())).unwrap(), w(2));
    }

    #[test]
    fn twist_by_fifth_of_lambda() {
        let tab = VariableTable::new([("v2", 2), ("l1", 1)]).unwrap();
        let sl5 = FormalBundle::new(5, vec![GradedPoly::zero(&tab), GradedPoly::var(&tab, "v2").unwrap()], &tab, 2).unwrap();
        let l = LineClass::new(GradedPoly::var(&tab, "l1").unwrap().scale(&rat(1, 5))).unwrap();
        assert_eq!(twist(&sl5, &l).unwrap().c(1), GradedPoly::var(&tab, "l1").unwrap());
    }

    #[test]
    fn line_class_rejects_degree_two() {
        assert!(LineClass::new(p("w2")).is_err());
    }

    #[test]
    fn sym_square_rank_two() {
        let s = sym_power(&w(3), 2).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.c(1), p("3*w1"));
        assert_eq!(s.c(2), p("2*w1^2 + 4*w2"));
        assert_eq!(s.c(3), p("4*w1*w2"));
        assert_eq!(sym_power(&w(3), 1).unwrap(), w(3));
    }

    #[test]
    fn sym_square_ranks() {
        assert_eq!(sym_power(&v(2), 2).unwrap().rank(), 15);
        let six = FormalBundle::generic("e", 6, 2);
        assert_eq!(sym_power(&six, 2).unwrap().rank(), 21);
    }

    #[test]
    fn wedge_edge_cases() {
        let top = wedge_power(&v(4), 5).unwrap();
        assert_eq!(top.rank(), 1);
        assert_eq!(top.c(1), p("v1"));
        let zero = wedge_power(&v(4), 0).unwrap();
        assert_eq!(zero, FormalBundle::trivial(1, &table(), 4));
        assert_eq!(
            wedge_power(&v(4), 6).unwrap_err(),
            Error::WedgeOutOfRange { k: 6, rank: 5 }
        );
    }

    #[test]
    fn wedge_four_is_dual_twisted_by_determinant() {
        let vb = v(5);
        let lhs = wedge_power(&vb, 4).unwrap();
        let rhs = twist(&dual(&vb), &LineClass::new(p("v1")).unwrap()).unwrap();
        assert_eq!(lhs.c(1), p("4*v1"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_examples() {
        let vb = v(4);
        let s2 = sym_power(&vb, 2).unwrap();
        let triv = FormalBundle::trivial(0, &table(), 4);
        assert_eq!(sequence_quotient(&s2, &triv).unwrap(), s2);
        let f = FormalBundle::generic("f", 4, 4);
        let q = sequence_quotient(&s2, &f).unwrap();
        assert_eq!(q.rank(), 11);
        assert_eq!(
            sequence_quotient(&f, &s2).unwrap_err(),
            Error::RankUnderflow { sub: 15, total: 4 }
        );
    }

    #[test]
    fn quotient_reports_inconsistency() {
        // a generic rank-3 bundle modulo a generic rank-2 one is not a line
        let a = FormalBundle::generic("v", 3, 3).embed(&table()).unwrap();
        let b = w(3);
        assert_eq!(
            sequence_quotient(&a, &b).unwrap_err(),
            Error::ExcessChernClass { rank: 1, degree: 2 }
        );
        let (q, excess) = sequence_quotient_with_relations(&a, &b).unwrap();
        assert_eq!(q.c(1), p("v1 - w1"));
        assert_eq!(excess.len(), 2);
        assert!(!excess[0].is_zero());
    }

    #[test]
    fn chern_character_line() {
        let l = FormalBundle::line(&LineClass::new(p("x")).unwrap(), 3);
        let ch = chern_character(&l);
        assert_eq!(ch[0], p("1"));
        assert_eq!(ch[1], p("x"));
        assert_eq!(ch[2], p("x^2/2"));
        assert_eq!(ch[3], p("x^3/6"));
    }

    #[test]
    fn chern_character_rank_two() {
        let ch = chern_character(&w(2));
        assert_eq!(ch[1], p("w1"));
        assert_eq!(ch[2], p("(w1^2 - 2*w2)/2"));
    }

    #[test]
    fn character_inverse() {
        let ch = vec![p("1"), p("x"), p("x^2/2")];
        let l = chern_from_character(&ch, 1, 2).unwrap();
        assert_eq!(l.c(1), p("x"));
        assert_eq!(l.c(2), p("0"));
        assert!(chern_from_character(&[p("2"), p("x")], 1, 1).is_err());
        // a rank-1 character with a nonzero c_2 is rejected
        let bad = vec![p("1"), p("x"), p("0")];
        assert_eq!(
            chern_from_character(&bad, 1, 2).unwrap_err(),
            Error::ExcessChernClass { rank: 1, degree: 2 }
        );
    }

    #[test]
    fn todd_of_line() {
        let l = FormalBundle::line(&LineClass::new(p("x")).unwrap(), 4);
        let td = todd_class(&l);
        assert_eq!(td[1], p("x/2"));
        assert_eq!(td[2], p("x^2/12"));
        assert_eq!(td[3], p("0"));
        assert_eq!(td[4], p("-x^4/720"));
    }

    #[test]
    fn tensor_with_line_is_twist() {
        let t = LineClass::new(p("t")).unwrap();
        let line = FormalBundle::line(&t, 4);
        let vb = v(4);
        assert_eq!(tensor(&vb, &line).unwrap(), twist(&vb, &t).unwrap());
    }

    #[test]
    fn determinant_line() {
        assert_eq!(determinant(&v(3)).c(1), p("v1"));
    }

    #[test]
    fn excess_classes_rejected_on_construction() {
        assert_eq!(
            FormalBundle::new(1, vec![p("x"), p("x^2")], &table(), 2).unwrap_err(),
            Error::ExcessChernClass { rank: 1, degree: 2 }
        );
        assert!(matches!(
            FormalBundle::new(2, vec![p("w2")], &table(), 2),
            Err(Error::WrongDegree { expected: 1, found: 2 })
        ));
    }
}
