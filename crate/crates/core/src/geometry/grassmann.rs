use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{GradedPoly, Rational, VariableTable};
use crate::error::{Error, Result};
use crate::graded::RingPresentation;
use crate::schur::Partition;

/// Chow ring of the Grassmannian `G(k, n)` of `k`-planes in `C^n`, presented
/// in the Chern classes `s1..sk` of the tautological subbundle `S` with
/// relations `c_j(Q) = 0` for `n - k < j <= n`, where `c(Q) = c(S)^{-1}`.
#[derive(Clone, Debug)]
pub struct GrassmannData {
    k: u32,
    n: u32,
    ring: RingPresentation,
    /// `c_0(Q)..c_n(Q)`.
    quotient_classes: Vec<GradedPoly>,
}

pub fn grass_dim(k: u32, n: u32) -> Result<u32> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("G({k},{n}) needs 1 <= k < n")));
    }
    Ok(k * (n - k))
}

impl GrassmannData {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        grass_dim(k, n)?;
        let table = VariableTable::indexed("s", k);
        let s: Vec<GradedPoly> = (0..table.len()).map(|i| GradedPoly::var_at(&table, i)).collect();
        // inverse series of 1 + s1 + ... + sk
        let mut q = vec![GradedPoly::one(&table)];
        for j in 1..=n as usize {
            let mut acc = GradedPoly::zero(&table);
            for i in 1..=j.min(k as usize) {
                acc = &acc - &(&s[i - 1] * &q[j - i]);
            }
            q.push(acc);
        }
        let relations = q[(n - k + 1) as usize..=n as usize].to_vec();
        let ring = RingPresentation::new(format!("G({k},{n})"), table, relations)?;
        Ok(GrassmannData {
            k,
            n,
            ring,
            quotient_classes: q,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.k * (self.n - self.k)
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.ring.table()
    }

    /// `c_j(Q)`, zero outside `0..=n`.
    pub fn quotient_class(&self, j: i64) -> GradedPoly {
        if j < 0 || j as usize >= self.quotient_classes.len() {
            return GradedPoly::zero(self.table());
        }
        self.quotient_classes[j as usize].clone()
    }

    /// Schubert class `σ_λ = det(c_{λ_i - i + j}(Q))` (Giambelli); zero if
    /// `λ` does not fit in the `k x (n-k)` box.
    pub fn schubert_class(&self, lambda: &Partition) -> GradedPoly {
        if !Partition::rectangle(self.k, self.n - self.k).contains(lambda) {
            return GradedPoly::zero(self.table());
        }
        let l = lambda.rows();
        let m: Vec<Vec<GradedPoly>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| self.quotient_class(lambda.part(i) as i64 - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        determinant(&m, self.table())
    }

    pub fn point_class(&self) -> GradedPoly {
        self.schubert_class(&Partition::rectangle(self.k, self.n - self.k))
    }

    /// Degree of a top-degree class, normalized by `∫ point = 1`.
    pub fn integrate(&self, x: &GradedPoly) -> Result<Rational> {
        let x = x.embed(self.table())?;
        let top = self.dim();
        match x.homogeneous_degree()? {
            None => return Ok(Rational::zero()),
            Some(d) if d != top => return Err(Error::WrongDegree { expected: top, found: d }),
            Some(_) => {}
        }
        let point = self.ring.coordinates(&self.point_class(), top)?;
        let val = self.ring.coordinates(&x, top)?;
        if point.len() != 1 || point[0].is_zero() {
            return Err(Error::TopNotOneDimensional {
                degree: top,
                dim: point.len(),
            });
        }
        Ok(&val[0] / &point[0])
    }

    /// `∫ σ_1^{k(n-k)}`.
    pub fn plucker_degree(&self) -> Result<BigInt> {
        let sigma1 = self.quotient_class(1);
        let d = self.integrate(&sigma1.pow(self.dim()))?;
        if !d.is_integer() {
            return Err(Error::Inconsistent(format!("non-integral degree {d}")));
        }
        Ok(d.to_integer())
    }
}

fn determinant(m: &[Vec<GradedPoly>], table: &Arc<VariableTable>) -> GradedPoly {
    if m.is_empty() {
        return GradedPoly::one(table);
    }
    let mut acc = GradedPoly::zero(table);
    for j in 0..m.len() {
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
        let term = &m[0][j] * &determinant(&minor, table);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

pub fn plucker_degree(k: u32, n: u32) -> Result<BigInt> {
    GrassmannData::new(k, n)?.plucker_degree()
}
