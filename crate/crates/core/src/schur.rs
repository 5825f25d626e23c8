//! Partitions, Schur functor dimensions, Littlewood-Richardson products and
//! the plethysm `h_2[e_2]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{factorial, GradedPoly, Rational, VariableTable};
use crate::error::{Error, Result};

/// Largest partition size accepted by the enumerating operations.
pub const PARTITION_SIZE_GUARD: u32 = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; the parts must be weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `rows x cols` rectangle.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Does the Young diagram of `other` fit inside this one?
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partition complementary to `self` in the `rows x cols` box, if it fits.
    pub fn complement_in(&self, rows: u32, cols: u32) -> Option<Self> {
        if !Partition::rectangle(rows, cols).contains(self) {
            return None;
        }
        Partition::new(
            (0..rows as usize)
                .rev()
                .map(|i| cols - self.part(i))
                .collect::<Vec<_>>(),
        )
        .ok()
    }

    fn cells(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    fn hook(&self, conj: &Partition, i: usize, j: u32) -> u32 {
        (self.part(i) - j - 1) + (conj.part(j as usize) - i as u32 - 1) + 1
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn guard(&self) -> Result<()> {
        if self.size() > PARTITION_SIZE_GUARD {
            return Err(Error::Guard(format!(
                "partition {self} exceeds size {PARTITION_SIZE_GUARD}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Formal sum of Schur functors with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurDecomposition(BTreeMap<Partition, u64>);

impl SchurDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.0.entry(p).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.0.get(p).copied().unwrap_or(0)
    }

    /// Terms by decreasing partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.0.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum mult * dim S_λ(C^n)`.
    pub fn dimension(&self, n: u32) -> BigInt {
        self.terms()
            .map(|(p, m)| dim_schur(p, n) * BigInt::from(m))
            .sum()
    }

    pub fn restrict_to_box(&self, rows: u32, cols: u32) -> Self {
        let bx = Partition::rectangle(rows, cols);
        SchurDecomposition(
            self.0
                .iter()
                .filter(|(p, _)| bx.contains(p))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        )
    }
}

impl fmt::Display for SchurDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "S{p}")?;
        }
        Ok(())
    }
}

/// `dim S_λ(C^n) = prod_{cells} (n + content) / hook`.
pub fn dim_schur(lambda: &Partition, n: u32) -> BigInt {
    if lambda.rows() > n as usize {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= BigInt::from(n as i64 + j as i64 - i as i64);
        den *= BigInt::from(lambda.hook(&conj, i, j));
    }
    num / den
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let den: BigInt = lambda
        .cells()
        .map(|(i, j)| BigInt::from(lambda.hook(&conj, i, j)))
        .product();
    factorial(lambda.size()) / den
}

/// Littlewood-Richardson expansion of `s_λ s_μ`: fillings of `ν/λ` with
/// `μ_i` entries `i`, semistandard, with lattice reverse reading word.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Result<SchurDecomposition> {
    lambda.guard()?;
    mu.guard()?;
    if lambda.size() + mu.size() > PARTITION_SIZE_GUARD {
        return Err(Error::Guard(format!(
            "product of {lambda} and {mu} exceeds size {PARTITION_SIZE_GUARD}"
        )));
    }
    let mut out = SchurDecomposition::new();
    // labels[r] lists the labels of the new cells of row r, left to right
    let rows = lambda.rows() + mu.rows();
    let mut shape: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); rows];
    add_strips(mu, 0, &mut shape, &mut labels, &mut out);
    Ok(out)
}

fn add_strips(
    mu: &Partition,
    label: usize,
    shape: &mut Vec<u32>,
    labels: &mut Vec<Vec<u32>>,
    out: &mut SchurDecomposition,
) {
    if label == mu.rows() {
        if is_lattice(labels, mu.rows()) {
            out.add(Partition::new(shape.clone()).expect("valid shape"), 1);
        }
        return;
    }
    let before = shape.clone();
    place_strip(mu, label, 0, mu.part(label), &before, shape, labels, out);
}

/// Distributes `left` cells labelled `label + 1` over rows `row..` as a
/// horizontal strip on `before`.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    mu: &Partition,
    label: usize,
    row: usize,
    left: u32,
    before: &[u32],
    shape: &mut Vec<u32>,
    labels: &mut Vec<Vec<u32>>,
    out: &mut SchurDecomposition,
) {
    if left == 0 {
        add_strips(mu, label + 1, shape, labels, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    // horizontal strip: new length at most the old length of the row above
    let cap = if row == 0 { left } else { (before[row - 1] - before[row]).min(left) };
    for take in (0..=cap).rev() {
        shape[row] = before[row] + take;
        if row > 0 && shape[row] > shape[row - 1] {
            continue;
        }
        for _ in 0..take {
            labels[row].push(label as u32 + 1);
        }
        place_strip(mu, label, row + 1, left - take, before, shape, labels, out);
        for _ in 0..take {
            labels[row].pop();
        }
    }
    shape[row] = before[row];
}

fn is_lattice(labels: &[Vec<u32>], kinds: usize) -> bool {
    let mut counts = vec![0u32; kinds + 1];
    for row in labels {
        for &l in row.iter().rev() {
            counts[l as usize] += 1;
            if l > 1 && counts[l as usize] > counts[l as usize - 1] {
                return false;
            }
        }
    }
    true
}

/// Complete homogeneous symmetric polynomial `h_d(x_1..x_n)`.
fn complete_homogeneous(table: &Arc<VariableTable>, d: i64) -> GradedPoly {
    if d < 0 {
        return GradedPoly::zero(table);
    }
    GradedPoly::from_terms(
        table,
        crate::algebra::monomial_basis(table, d as u32)
            .into_iter()
            .map(|e| (e, Rational::one())),
    )
}

fn poly_det(m: &[Vec<GradedPoly>], table: &Arc<VariableTable>) -> GradedPoly {
    match m.len() {
        0 => GradedPoly::one(table),
        1 => m[0][0].clone(),
        n => {
            let mut acc = GradedPoly::zero(table);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<GradedPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &poly_det(&minor, table);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Schur polynomial `s_λ` in the variables of `table` (all of weight 1),
/// by Jacobi-Trudi.
pub fn schur_polynomial(lambda: &Partition, table: &Arc<VariableTable>) -> GradedPoly {
    let l = lambda.rows();
    let m: Vec<Vec<GradedPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| complete_homogeneous(table, lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    poly_det(&m, table)
}

/// Expands a symmetric polynomial in `x_1..x_n` in Schur polynomials by
/// repeatedly removing the lexicographically leading term.
pub fn schur_expand(p: &GradedPoly) -> Result<SchurDecomposition> {
    let table = Arc::clone(p.table());
    let mut rest = p.clone();
    let mut out = SchurDecomposition::new();
    while !rest.is_zero() {
        let (lead, c) = rest.terms().last().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lambda = Partition::new(lead.clone())
            .map_err(|_| Error::InvalidArgument("polynomial is not symmetric".into()))?;
        if !c.is_integer() || c.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "coefficient {c} of S{lambda} is not a multiplicity"
            )));
        }
        let mult = c.to_integer().to_u64().expect("small multiplicity");
        out.add(lambda.clone(), mult);
        rest = &rest - &schur_polynomial(&lambda, &table).scale(&c);
    }
    Ok(out)
}

/// GL_n-decomposition of `Sym^2(∧^2 C^n)` via `h_2[e_2]` in `n` variables.
pub fn decompose_sym2_wedge2(n: u32) -> Result<SchurDecomposition> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("n = {n} < 4")));
    }
    if n > PARTITION_SIZE_GUARD {
        return Err(Error::Guard(format!("{n} variables")));
    }
    let table = VariableTable::indexed_uniform("x", n);
    let mut pairs = Vec::new();
    for i in 0..n as usize {
        for j in i + 1..n as usize {
            let mut e = vec![0; n as usize];
            e[i] = 1;
            e[j] = 1;
            pairs.push(e);
        }
    }
    let mut p = GradedPoly::zero(&table);
    for a in 0..pairs.len() {
        for b in a..pairs.len() {
            let e: Vec<u32> = pairs[a].iter().zip(&pairs[b]).map(|(x, y)| x + y).collect();
            p.add_term(e, Rational::one());
        }
    }
    schur_expand(&p)
}
