//! Finitely presented weighted-graded commutative `Q`-algebras.
//!
//! A presentation `Q[x_1..x_n]/(r_1..r_m)` with homogeneous relations is
//! never Gröbner-reduced. Instead each graded piece `R^d` is computed on its
//! own: the degree-`d` part of the ideal is spanned by the products `m * r_j`
//! with `m` a monomial of degree `d - deg r_j`, and row reduction of that span
//! against the monomial basis of degree `d` yields the dimension, a monomial
//! basis of the quotient (the non-pivot columns) and normal forms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{
    int, monomial_basis, parse_poly, ExactMatrix, Exponents, GradedPoly, Rational, RowReduction,
    VariableTable,
};
use crate::error::{Error, Result};

/// One graded piece `R^d` of a presented ring.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    /// Monomial basis of the free algebra in degree `d`, graded-lex order.
    pub monomials: Vec<Exponents>,
    pub ideal_rank: usize,
    /// Monomials whose classes form a basis of `R^d`.
    pub quotient_basis: Vec<Exponents>,
    quotient_columns: Vec<usize>,
    reduction: RowReduction,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.monomials.len() - self.ideal_rank
    }

    fn column_of(&self, exps: &[u32]) -> Option<usize> {
        self.monomials.iter().position(|m| m.as_slice() == exps)
    }
}

#[derive(Default)]
struct PieceCache(Mutex<BTreeMap<u32, Arc<GradedPiece>>>);

impl Clone for PieceCache {
    fn clone(&self) -> Self {
        PieceCache(Mutex::new(self.0.lock().unwrap().clone()))
    }
}

/// `Q[vars]/(relations)` with every relation homogeneous and nonzero.
#[derive(Clone)]
pub struct RingPresentation {
    label: String,
    table: Arc<VariableTable>,
    relations: Vec<GradedPoly>,
    relation_degrees: Vec<u32>,
    cache: PieceCache,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingPresentation")
            .field("label", &self.label)
            .field("table", &self.table)
            .field("relations", &self.relations)
            .finish()
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.relations == other.relations
    }
}

impl RingPresentation {
    pub fn new(
        label: impl Into<String>,
        table: Arc<VariableTable>,
        relations: Vec<GradedPoly>,
    ) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        let mut degrees = Vec::with_capacity(relations.len());
        for (i, r) in relations.into_iter().enumerate() {
            let r = r.embed(&table)?;
            if r.is_zero() {
                return Err(Error::ZeroRelation(i));
            }
            match r.homogeneous_degree() {
                Ok(Some(d)) => degrees.push(d),
                _ => return Err(Error::InhomogeneousRelation(i)),
            }
            rels.push(r);
        }
        Ok(RingPresentation {
            label: label.into(),
            table,
            relations: rels,
            relation_degrees: degrees,
            cache: PieceCache::default(),
        })
    }

    /// The presentation `Q[k1,k2]/(a*k1^3 - b*k1*k2, c*k1^4 - d*k2^2)`.
    pub fn two_kappa(label: &str, [a, b, c, d]: [i64; 4]) -> Self {
        let t = VariableTable::new([("k1", 1), ("k2", 2)]).unwrap();
        let r1 = GradedPoly::from_terms(&t, [(vec![3, 0], int(a)), (vec![1, 1], int(-b))]);
        let r2 = GradedPoly::from_terms(&t, [(vec![4, 0], int(c)), (vec![0, 2], int(-d))]);
        Self::new(label, t, vec![r1, r2]).unwrap()
    }

    /// Tautological ring of `M_6`: `Q[k1,k2]/(127k1^3 - 2304k1k2, 113k1^4 - 36864k2^2)`.
    pub fn m6() -> Self {
        Self::two_kappa("M6", [127, 2304, 113, 36864])
    }

    /// `Q[k1]/(k1^(g-1))`, the tautological ring of `M_g` for `2 <= g <= 5`.
    pub fn kappa_one_truncated(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidArgument(format!("genus {g} < 2")));
        }
        let t = VariableTable::new([("k1", 1)]).unwrap();
        let r = GradedPoly::monomial(&t, vec![g - 1], Rational::one());
        Self::new(format!("M{g}"), t, vec![r])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn relations(&self) -> &[GradedPoly] {
        &self.relations
    }

    /// Spanning set of the degree-`d` part of the ideal: one row per product
    /// `m * r_j`, relations in order and multipliers in graded-lex order,
    /// written in the coordinates of `monomial_basis(d)`.
    pub fn ideal_degree_piece(&self, d: u32) -> ExactMatrix {
        let basis = monomial_basis(&self.table, d);
        let index: BTreeMap<&Exponents, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for (r, &rd) in self.relations.iter().zip(&self.relation_degrees) {
            if rd > d {
                continue;
            }
            for m in monomial_basis(&self.table, d - rd) {
                let mut row = vec![Rational::zero(); basis.len()];
                for (e, c) in r.terms() {
                    let prod: Exponents = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    row[index[&prod]] = c.clone();
                }
                rows.push(row);
            }
        }
        ExactMatrix::from_rows(rows, basis.len())
    }

    /// Graded piece of degree `d`, computed once and memoized.
    pub fn piece(&self, d: u32) -> Arc<GradedPiece> {
        if let Some(p) = self.cache.0.lock().unwrap().get(&d) {
            return Arc::clone(p);
        }
        let monomials = monomial_basis(&self.table, d);
        let reduction = self.ideal_degree_piece(d).row_reduce();
        let quotient_columns: Vec<usize> = (0..monomials.len())
            .filter(|c| !reduction.pivots.contains(c))
            .collect();
        let piece = Arc::new(GradedPiece {
            degree: d,
            quotient_basis: quotient_columns.iter().map(|&c| monomials[c].clone()).collect(),
            ideal_rank: reduction.rank,
            monomials,
            quotient_columns,
            reduction,
        });
        // concurrent callers may both compute; the values are identical
        self.cache
            .0
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(piece)
            .clone()
    }

    /// `dim R^d` for `d = 0..=max_d`.
    pub fn hilbert_function(&self, max_d: u32) -> Vec<usize> {
        (0..=max_d).map(|d| self.piece(d).dim()).collect()
    }

    /// Coordinates of a homogeneous element of degree `d` on the quotient
    /// basis of `R^d`.
    pub fn coordinates(&self, x: &GradedPoly, d: u32) -> Result<Vec<Rational>> {
        let x = x.embed(&self.table)?;
        if let Some(found) = x.homogeneous_degree()? {
            if found != d {
                return Err(Error::WrongDegree { expected: d, found });
            }
        }
        let piece = self.piece(d);
        let mut v = vec![Rational::zero(); piece.monomials.len()];
        for (e, c) in x.terms() {
            v[piece.column_of(e).expect("monomial of degree d")] = c.clone();
        }
        let red = &piece.reduction;
        for (row, &pc) in red.pivots.iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (j, a) in red.echelon.row(row).iter().enumerate() {
                if !a.is_zero() {
                    v[j] -= &f * a;
                }
            }
        }
        Ok(piece.quotient_columns.iter().map(|&c| v[c].clone()).collect())
    }

    /// Representative of `x` supported on the quotient basis of its degree.
    pub fn normal_form(&self, x: &GradedPoly) -> Result<GradedPoly> {
        let x = x.embed(&self.table)?;
        let Some(d) = x.homogeneous_degree()? else {
            return Ok(x);
        };
        let coords = self.coordinates(&x, d)?;
        let piece = self.piece(d);
        Ok(GradedPoly::from_terms(
            &self.table,
            piece.quotient_basis.iter().cloned().zip(coords),
        ))
    }

    /// Basis elements of `R^d` as polynomials.
    pub fn basis_elements(&self, d: u32) -> Vec<GradedPoly> {
        self.piece(d)
            .quotient_basis
            .iter()
            .map(|m| GradedPoly::monomial(&self.table, m.clone(), Rational::one()))
            .collect()
    }

    /// Multiplication pairing `R^i x R^(top-i) -> R^top`, written against the
    /// single basis monomial of the one-dimensional top piece.
    pub fn pairing_matrix(&self, i: u32, top: u32) -> Result<ExactMatrix> {
        if i > top {
            return Err(Error::InvalidArgument(format!("degree {i} exceeds top {top}")));
        }
        let top_dim = self.piece(top).dim();
        if top_dim != 1 {
            return Err(Error::TopNotOneDimensional { degree: top, dim: top_dim });
        }
        let left = self.basis_elements(i);
        let right = self.basis_elements(top - i);
        let mut rows = Vec::with_capacity(left.len());
        for a in &left {
            let mut row = Vec::with_capacity(right.len());
            for b in &right {
                let c = self.coordinates(&(a * b), top)?;
                row.push(c[0].clone());
            }
            rows.push(row);
        }
        Ok(ExactMatrix::from_rows(rows, right.len()))
    }

    /// Checks the Poincaré duality properties with socle in degree `top`.
    pub fn poincare_duality(&self, top: u32) -> PoincareReport {
        let max_w = self.table.weights().iter().copied().max().unwrap_or(1);
        let hilbert = self.hilbert_function(top + max_w);
        let mut failures = Vec::new();
        for d in 0..=top {
            let (a, b) = (hilbert[d as usize], hilbert[(top - d) as usize]);
            if a != b {
                failures.push(format!("dim R^{d} = {a} but dim R^{} = {b}", top - d));
            }
        }
        for d in top + 1..=top + max_w {
            let dim = hilbert[d as usize];
            if dim != 0 {
                failures.push(format!("dim R^{d} = {dim}, expected 0"));
            }
        }
        let top_dim = hilbert[top as usize];
        let mut pairing_ranks = Vec::new();
        if top_dim != 1 {
            failures.push(format!("top piece R^{top} has dimension {top_dim}"));
        } else {
            for i in 0..=top {
                let m = self.pairing_matrix(i, top).expect("top piece is one-dimensional");
                let rank = m.rank();
                if rank != m.rows() || rank != m.cols() {
                    failures.push(format!(
                        "pairing R^{i} x R^{} has rank {rank} on a {}x{} matrix",
                        top - i,
                        m.rows(),
                        m.cols()
                    ));
                }
                pairing_ranks.push(rank);
            }
        }
        PoincareReport {
            top,
            hilbert,
            pairing_ranks,
            failures,
        }
    }

    pub fn is_poincare_duality(&self, top: u32) -> bool {
        self.poincare_duality(top).holds()
    }

    /// Plain-text form: an optional `# label` line, a `ring[vars; weights]`
    /// header, then one relation per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.label.is_empty() {
            out.push_str(&format!("# {}\n", self.label));
        }
        out.push_str(&format!(
            "ring[{}; {}]\n",
            self.table.names().join(", "),
            self.table
                .weights()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        for r in &self.relations {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut label = String::new();
        let mut table = None;
        let mut relations = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let start = offset;
            offset += line.len() + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                if label.is_empty() && table.is_none() {
                    label = rest.trim().to_string();
                }
                continue;
            }
            match &table {
                None => table = Some(parse_ring_header(trimmed, start)?),
                Some(t) => relations.push(parse_poly(trimmed, t).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse { pos: start + pos, msg },
                    other => other,
                })?),
            }
        }
        let table = table.ok_or(Error::Parse {
            pos: 0,
            msg: "missing `ring[vars; weights]` header".into(),
        })?;
        Self::new(label, table, relations)
    }
}

fn parse_ring_header(line: &str, offset: usize) -> Result<Arc<VariableTable>> {
    let bad = |msg: &str| Error::Parse {
        pos: offset,
        msg: msg.to_string(),
    };
    let inner = line
        .strip_prefix("ring[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("expected `ring[vars; weights]`"))?;
    let (vars, weights) = inner
        .split_once(';')
        .ok_or_else(|| bad("expected `;` between variables and weights"))?;
    let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
    let weights: Vec<u32> = weights
        .split(',')
        .map(|w| w.trim().parse().map_err(|_| bad("weights must be integers")))
        .collect::<Result<_>>()?;
    if vars.len() != weights.len() {
        return Err(bad("number of variables and weights differ"));
    }
    VariableTable::new(vars.into_iter().zip(weights))
}

/// Outcome of a Poincaré duality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    pub top: u32,
    /// Hilbert function through `top + max weight`.
    pub hilbert: Vec<usize>,
    /// Rank of each pairing `R^i x R^(top-i)`, when the top piece is a line.
    pub pairing_ranks: Vec<usize>,
    pub failures: Vec<String>,
}

impl PoincareReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}
