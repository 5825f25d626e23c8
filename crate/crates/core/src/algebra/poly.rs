use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::table::{Exponents, VariableTable};
use crate::error::{Error, Result};

/// Multivariate polynomial over `Q` in the variables of a weighted table.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    table: Arc<VariableTable>,
    terms: BTreeMap<Exponents, Rational>,
}

impl GradedPoly {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        GradedPoly {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn constant(table: &Arc<VariableTable>, c: Rational) -> Self {
        Self::monomial(table, vec![0; table.len()], c)
    }

    pub fn monomial(table: &Arc<VariableTable>, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), table.len(), "exponent vector length");
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `i`-th variable of the table.
    pub fn var_at(table: &Arc<VariableTable>, i: usize) -> Self {
        let mut exps = vec![0; table.len()];
        exps[i] = 1;
        Self::monomial(table, exps, Rational::one())
    }

    pub fn var(table: &Arc<VariableTable>, name: &str) -> Result<Self> {
        table
            .index_of(name)
            .map(|i| Self::var_at(table, i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(table: &Arc<VariableTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(table);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.table.len()])
    }

    /// Returns `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn term_degree(&self, exps: &[u32]) -> u32 {
        self.table.degree(exps)
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.term_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| self.term_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if self.is_homogeneous() {
            Ok(self.degree())
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        self.filter(|deg| deg == d)
    }

    /// Drops all terms of degree greater than `max`.
    pub fn truncate(&self, max: u32) -> Self {
        self.filter(|deg| deg <= max)
    }

    fn filter(&self, keep: impl Fn(u32) -> bool) -> Self {
        GradedPoly {
            table: Arc::clone(&self.table),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(self.term_degree(e)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn same_table(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_table(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_table(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_bounded(other, None)
    }

    /// Product with all terms above degree `max` discarded.
    pub fn truncated_mul(&self, other: &Self, max: u32) -> Result<Self> {
        self.mul_bounded(other, Some(max))
    }

    fn mul_bounded(&self, other: &Self, max: Option<u32>) -> Result<Self> {
        self.same_table(other)?;
        let mut out = Self::zero(&self.table);
        for (ea, ca) in &self.terms {
            let da = self.term_degree(ea);
            if max.is_some_and(|m| da > m) {
                continue;
            }
            for (eb, cb) in &other.terms {
                if let Some(m) = max {
                    if da + self.term_degree(eb) > m {
                        continue;
                    }
                }
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        GradedPoly {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn truncated_pow(&self, n: u32, max: u32) -> Self {
        let mut acc = Self::one(&self.table).truncate(max);
        for _ in 0..n {
            acc = acc.truncated_mul(self, max).expect("same table");
        }
        acc
    }

    /// Re-expresses the polynomial over a table containing all of its variables.
    pub fn embed(&self, target: &Arc<VariableTable>) -> Result<Self> {
        if Arc::ptr_eq(&self.table, target) || *self.table == **target {
            return Ok(GradedPoly {
                table: Arc::clone(target),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.table.len());
        for (i, name) in self.table.names().iter().enumerate() {
            let j = target
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if target.weight(j) != self.table.weight(i) {
                return Err(Error::WeightConflict {
                    name: name.clone(),
                    left: self.table.weight(i),
                    right: target.weight(j),
                });
            }
            map.push(j);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] = x;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Ring map sending variable `i` to `images[i]`; all images share a table.
    /// Terms above `max` are dropped when a bound is given.
    pub fn substitute(&self, images: &[GradedPoly], max: Option<u32>) -> Result<Self> {
        assert_eq!(images.len(), self.table.len(), "one image per variable");
        let target = match images.first() {
            Some(p) => Arc::clone(&p.table),
            None => {
                return Ok(GradedPoly {
                    table: VariableTable::empty(),
                    terms: self
                        .terms
                        .iter()
                        .map(|(_, c)| (Vec::new(), c.clone()))
                        .collect(),
                })
            }
        };
        let mut power_cache: Vec<Vec<GradedPoly>> = images
            .iter()
            .map(|p| p.embed(&target).map(|p| vec![GradedPoly::one(&target), p]))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut term = GradedPoly::constant(&target, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= x as usize {
                    let next = match max {
                        Some(m) => cache.last().unwrap().truncated_mul(&cache[1], m)?,
                        None => cache.last().unwrap().checked_mul(&cache[1])?,
                    };
                    cache.push(next);
                }
                term = match max {
                    Some(m) => term.truncated_mul(&cache[x as usize], m)?,
                    None => term.checked_mul(&cache[x as usize])?,
                };
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Terms sorted by descending degree, then descending lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            self.term_degree(b)
                .cmp(&self.term_degree(a))
                .then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.table.name(i).to_string()
                    } else {
                        format!("{}^{}", self.table.name(i), x)
                    }
                })
                .collect();
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs} * {}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_add(rhs).expect("polynomial tables must match")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_sub(rhs).expect("polynomial tables must match")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_mul(rhs).expect("polynomial tables must match")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GradedPoly {
            type Output = GradedPoly;
            fn $m(self, rhs: GradedPoly) -> GradedPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn kappa() -> Arc<VariableTable> {
        VariableTable::new([("k1", 1), ("k2", 2)]).unwrap()
    }

    fn r1(t: &Arc<VariableTable>) -> GradedPoly {
        GradedPoly::from_terms(t, [(vec![3, 0], int(127)), (vec![1, 1], int(-2304))])
    }

    #[test]
    fn square_of_k1() {
        let t = kappa();
        let k1 = GradedPoly::var(&t, "k1").unwrap();
        let sq = &k1 * &k1;
        assert_eq!(sq, GradedPoly::monomial(&t, vec![2, 0], int(1)));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn relation_times_generators() {
        let t = kappa();
        let k1 = GradedPoly::var(&t, "k1").unwrap();
        let k2 = GradedPoly::var(&t, "k2").unwrap();
        let a = &r1(&t) * &k1;
        assert_eq!(
            a,
            GradedPoly::from_terms(&t, [(vec![4, 0], int(127)), (vec![2, 1], int(-2304))])
        );
        let b = &r1(&t) * &k2;
        assert_eq!(b.homogeneous_degree().unwrap(), Some(5));
        assert_eq!(
            b,
            GradedPoly::from_terms(&t, [(vec![3, 1], int(127)), (vec![1, 2], int(-2304))])
        );
    }

    #[test]
    fn mismatched_tables_error() {
        let a = GradedPoly::one(&kappa());
        let b = GradedPoly::one(&VariableTable::indexed("v", 2));
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::TableMismatch);
        assert_eq!(a.checked_mul(&b).unwrap_err(), Error::TableMismatch);
    }

    #[test]
    fn display_format() {
        let t = kappa();
        assert_eq!(r1(&t).to_string(), "127 * k1^3 - 2304 * k1*k2");
        let p = GradedPoly::monomial(&t, vec![0, 2], rat(36864, 113));
        assert_eq!(p.to_string(), "36864/113 * k2^2");
        assert_eq!(GradedPoly::zero(&t).to_string(), "0");
        let q = GradedPoly::from_terms(&t, [(vec![1, 0], int(-1)), (vec![0, 0], rat(1, 2))]);
        assert_eq!(q.to_string(), "-k1 + 1/2");
    }

    #[test]
    fn substitution_and_truncation() {
        let t = kappa();
        let k1 = GradedPoly::var(&t, "k1").unwrap();
        let k2 = GradedPoly::var(&t, "k2").unwrap();
        // x -> k1 + k2 in Q[x]
        let x_table = VariableTable::new([("x", 1)]).unwrap();
        let x = GradedPoly::var(&x_table, "x").unwrap();
        let p = x.pow(2);
        let img = &k1 + &k2;
        let full = p.substitute(&[img.clone()], None).unwrap();
        assert_eq!(full, img.pow(2));
        let trunc = p.substitute(&[img.clone()], Some(3)).unwrap();
        assert_eq!(trunc, img.pow(2).truncate(3));
    }

    #[test]
    fn embed_into_larger_table() {
        let small = VariableTable::new([("k2", 2)]).unwrap();
        let p = GradedPoly::var(&small, "k2").unwrap();
        let big = kappa();
        let q = p.embed(&big).unwrap();
        assert_eq!(q, GradedPoly::var(&big, "k2").unwrap());
        let wrong = VariableTable::new([("k2", 1)]).unwrap();
        assert!(p.embed(&wrong).is_err());
    }
}
