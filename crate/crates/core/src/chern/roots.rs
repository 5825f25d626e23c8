//! Splitting-principle formulas: Chern classes of a construction on a
//! rank-`r` bundle written as polynomials in the elementary symmetric
//! functions `e_1..e_r` of its Chern roots.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::{Exponents, GradedPoly, Rational, VariableTable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Construction {
    Sym(u32),
    Wedge(u32),
}

/// Largest number of monomials of degree `<= D` in the root variables that
/// the root expansion will materialise.
const ROOT_MONOMIAL_GUARD: u64 = 400_000;
/// Largest rank of a constructed bundle.
pub(crate) const ROOT_COUNT_GUARD: u64 = 1_000_000;

type FormulaKey = (Construction, u32, u32);

fn cache() -> &'static Mutex<HashMap<FormulaKey, Arc<Vec<GradedPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<FormulaKey, Arc<Vec<GradedPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Table `e1..em`, `m = min(rank, trunc)`, weights `1..m`.
pub(crate) fn elementary_table(rank: u32, trunc: u32) -> Arc<VariableTable> {
    VariableTable::indexed("e", rank.min(trunc))
}

/// `c_1..c_trunc` of the construction applied to a rank-`rank` bundle, as
/// polynomials over [`elementary_table`].
pub(crate) fn universal_formula(
    construction: Construction,
    rank: u32,
    trunc: u32,
) -> Result<Arc<Vec<GradedPoly>>> {
    let key = (construction, rank, trunc);
    if let Some(f) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(f));
    }
    let formula = Arc::new(compute_formula(construction, rank, trunc)?);
    cache().lock().unwrap().insert(key, Arc::clone(&formula));
    Ok(formula)
}

fn monomial_count(vars: u64, max_deg: u64) -> u64 {
    // C(vars + max_deg, max_deg), saturating
    let mut acc: u64 = 1;
    for i in 0..max_deg {
        acc = acc.saturating_mul(vars + max_deg - i) / (i + 1);
    }
    acc
}

fn compute_formula(construction: Construction, rank: u32, trunc: u32) -> Result<Vec<GradedPoly>> {
    if monomial_count(rank as u64, trunc as u64) > ROOT_MONOMIAL_GUARD {
        return Err(Error::Guard(format!(
            "root expansion for rank {rank} to degree {trunc} is too large"
        )));
    }
    let roots = VariableTable::indexed_uniform("x", rank);
    let combos: Vec<Exponents> = match construction {
        Construction::Sym(k) => multisets(rank, k),
        Construction::Wedge(k) => subsets(rank, k),
    };
    if combos.len() as u64 > ROOT_COUNT_GUARD {
        return Err(Error::Guard(format!("{} Chern roots", combos.len())));
    }
    let mut total = GradedPoly::one(&roots);
    for exps in combos {
        let mut factor = GradedPoly::one(&roots);
        for (i, &m) in exps.iter().enumerate() {
            if m > 0 {
                let mut e = vec![0; rank as usize];
                e[i] = 1;
                factor.add_term(e, Rational::from_integer(m.into()));
            }
        }
        total = total.truncated_mul(&factor, trunc)?;
    }
    let etable = elementary_table(rank, trunc);
    let elementary = symmetric_to_elementary(&total, rank, &etable)?;
    Ok((1..=trunc).map(|d| elementary.component(d)).collect())
}

/// Root-multiplicity vectors of all size-`k` multisets of `rank` roots.
fn multisets(rank: u32, k: u32) -> Vec<Exponents> {
    fn rec(rank: usize, i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i + 1 == rank {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(rank, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if rank == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(rank as usize, 0, k, &mut vec![0; rank as usize], &mut out);
    out
}

fn subsets(rank: u32, k: u32) -> Vec<Exponents> {
    multisets(rank, k)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .collect()
}

/// Elementary symmetric polynomials `e_1..e_m` in the root variables.
fn elementary_in_roots(roots: &Arc<VariableTable>, m: u32) -> Vec<GradedPoly> {
    let r = roots.len() as u32;
    (1..=m)
        .map(|i| {
            GradedPoly::from_terms(
                roots,
                subsets(r, i).into_iter().map(|e| (e, Rational::one())),
            )
        })
        .collect()
}

/// Rewrites a symmetric polynomial in `rank` roots as a polynomial in the
/// elementary symmetric functions, by repeatedly cancelling the
/// lexicographically leading monomial.
pub(crate) fn symmetric_to_elementary(
    p: &GradedPoly,
    rank: u32,
    etable: &Arc<VariableTable>,
) -> Result<GradedPoly> {
    let roots = Arc::clone(p.table());
    let m = etable.len() as u32;
    let es = elementary_in_roots(&roots, m);
    let mut power_cache: HashMap<Exponents, GradedPoly> = HashMap::new();
    let mut rest = p.clone();
    let mut out = GradedPoly::zero(etable);
    while !rest.is_zero() {
        let (lead, c) = {
            let (e, c) = rest.terms().last().expect("nonzero");
            (e.clone(), c.clone())
        };
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
        // lead = (a_1 >= ... >= a_r); e-exponent b_i = a_i - a_{i+1}
        let mut b = vec![0u32; m as usize];
        for i in 0..rank as usize {
            let next = if i + 1 < rank as usize { lead[i + 1] } else { 0 };
            let bi = lead[i] - next;
            if bi > 0 {
                if i >= m as usize {
                    return Err(Error::InvalidArgument(
                        "symmetric polynomial exceeds truncation".into(),
                    ));
                }
                b[i] = bi;
            }
        }
        let prod = power_cache
            .entry(b.clone())
            .or_insert_with(|| {
                let mut acc = GradedPoly::one(&roots);
                for (i, &bi) in b.iter().enumerate() {
                    for _ in 0..bi {
                        acc = &acc * &es[i];
                    }
                }
                acc
            })
            .clone();
        rest = &rest - &prod.scale(&c);
        out.add_term(b, c);
    }
    debug_assert!(out.terms().all(|(_, c)| !c.is_zero()));
    Ok(out)
}
