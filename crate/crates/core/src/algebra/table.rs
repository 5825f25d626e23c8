use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of a [`VariableTable`].
pub type Exponents = Vec<u32>;

/// Ordered list of variable names with a positive degree per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VariableTable {
    pub fn new<I, S>(vars: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut seen = HashSet::new();
        for (name, weight) in vars {
            let name = name.into();
            if weight == 0 {
                return Err(Error::ZeroWeight(name));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateVariable(name));
            }
            names.push(name);
            weights.push(weight);
        }
        Ok(Arc::new(VariableTable { names, weights }))
    }

    /// Variables `prefix1..prefixN` with weights `1..N`, the usual layout
    /// for the Chern classes of a rank-N bundle.
    pub fn indexed(prefix: &str, count: u32) -> Arc<Self> {
        Self::new((1..=count).map(|i| (format!("{prefix}{i}"), i)))
            .expect("indexed names are distinct and weights positive")
    }

    /// `prefix1..prefixN`, all of weight 1.
    pub fn indexed_uniform(prefix: &str, count: u32) -> Arc<Self> {
        Self::new((1..=count).map(|i| (format!("{prefix}{i}"), 1)))
            .expect("indexed names are distinct")
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(VariableTable {
            names: Vec::new(),
            weights: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Weighted degree of a monomial.
    pub fn degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Table containing the variables of `self` followed by the new
    /// variables of `other`.
    pub fn union(&self, other: &VariableTable) -> Result<Arc<Self>> {
        let mut vars: Vec<(String, u32)> = self
            .names
            .iter()
            .cloned()
            .zip(self.weights.iter().copied())
            .collect();
        for (name, &w) in other.names.iter().zip(&other.weights) {
            match self.index_of(name) {
                Some(i) if self.weights[i] != w => {
                    return Err(Error::WeightConflict {
                        name: name.clone(),
                        left: self.weights[i],
                        right: w,
                    })
                }
                Some(_) => {}
                None => vars.push((name.clone(), w)),
            }
        }
        Self::new(vars)
    }

    /// True when every variable of `self` occurs in `other` with the same weight.
    pub fn is_subtable_of(&self, other: &VariableTable) -> bool {
        self.names
            .iter()
            .zip(&self.weights)
            .all(|(n, w)| other.index_of(n).map(|i| other.weights[i]) == Some(*w))
    }
}

/// All monomials of weighted degree exactly `d`, in graded-lex order:
/// lexicographically descending, so the highest power of the first variable
/// comes first.
pub fn monomial_basis(table: &VariableTable, d: u32) -> Vec<Exponents> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        for e in (0..=left / w).rev() {
            cur[i] = e;
            rec(weights, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; table.len()];
    rec(table.weights(), 0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kappa() -> Arc<VariableTable> {
        VariableTable::new([("k1", 1), ("k2", 2)]).unwrap()
    }

    #[test]
    fn basis_degree_four() {
        assert_eq!(
            monomial_basis(&kappa(), 4),
            vec![vec![4, 0], vec![2, 1], vec![0, 2]]
        );
    }

    #[test]
    fn basis_degree_zero_and_five() {
        assert_eq!(monomial_basis(&kappa(), 0), vec![vec![0, 0]]);
        assert_eq!(
            monomial_basis(&kappa(), 5),
            vec![vec![5, 0], vec![3, 1], vec![1, 2]]
        );
    }

    #[test]
    fn empty_table_has_only_constants() {
        let t = VariableTable::empty();
        assert_eq!(monomial_basis(&t, 0), vec![Vec::<u32>::new()]);
        assert!(monomial_basis(&t, 3).is_empty());
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            VariableTable::new([("x", 1), ("x", 2)]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert_eq!(
            VariableTable::new([("x", 0)]).unwrap_err(),
            Error::ZeroWeight("x".into())
        );
    }

    #[test]
    fn union_checks_weights() {
        let a = kappa();
        let b = VariableTable::new([("k2", 2), ("l1", 1)]).unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.names(), &["k1", "k2", "l1"]);
        let c = VariableTable::new([("k2", 3)]).unwrap();
        assert!(matches!(a.union(&c), Err(Error::WeightConflict { .. })));
    }
}
