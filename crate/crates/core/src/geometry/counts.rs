//! Dimension counts for quotient presentations of strata of `M_g`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::grassmann::grass_dim;
use super::hirzebruch::{aut_dim, h0_hirzebruch, solve_scroll_coefficient, HirzebruchClass};
use crate::algebra::{binomial, Rational};
use crate::error::{Error, Result};

/// `h^0(P^m, O(d)) = C(m + d, d)`.
pub fn forms_dim(m: u32, d: u32) -> BigInt {
    binomial(m as i64 + d as i64, d as i64)
}

/// Quadrics containing a canonical curve of genus `g`:
/// `g(g+1)/2 - (3g - 3)`.
pub fn canonical_quadrics(g: u32) -> Result<i64> {
    if g < 3 {
        return Err(Error::InvalidArgument(format!("genus {g} < 3")));
    }
    let g = g as i64;
    Ok(g * (g + 1) / 2 - (3 * g - 3))
}

pub fn gl_dim(n: u32) -> i64 {
    (n as i64) * (n as i64)
}

/// Also `dim SL(n)`.
pub fn pgl_dim(n: u32) -> i64 {
    gl_dim(n) - 1
}

pub fn moduli_dim(g: u32) -> i64 {
    3 * g as i64 - 3
}

/// `h^0(F_n, 3S + kF) - 1 - dim Aut(F_n)` for the trigonal locus with
/// Maroni invariant `n`.
pub fn trigonal_stratum_dim(g: u32, n: u32) -> Result<i64> {
    let k = solve_scroll_coefficient(g, n);
    if !k.is_integer() || k < Rational::zero() {
        return Err(Error::InvalidArgument(format!(
            "no trigonal curves of genus {g} on F_{n}"
        )));
    }
    let k = k.to_integer().to_i64().expect("small");
    let h0 = h0_hirzebruch(&HirzebruchClass::from_sf(n, 3, k))?;
    Ok(h0.to_i64().expect("small") - 1 - aut_dim(n))
}

/// Plane curves of degree `d`: `h^0(P^2, O(d)) - 1 - dim PGL(3)`.
pub fn plane_curves_dim(d: u32) -> i64 {
    forms_dim(2, d).to_i64().expect("small") - 1 - pgl_dim(3)
}

/// Binary forms: the ambient `C^{2g+3}` modulo `GL(2)`.
pub fn hyperelliptic_stratum_dim(g: u32) -> i64 {
    (2 * g as i64 + 3) - gl_dim(2)
}

/// Bielliptic curves: double covers of an elliptic curve branched in
/// `2g - 2` points.
pub fn bielliptic_stratum_dim(g: u32) -> i64 {
    2 * g as i64 - 2
}

/// Plane sextics with four assigned nodes: `P^27` minus `3` conditions per node.
pub fn nodal_sextics_dim(nodes: u32) -> i64 {
    forms_dim(2, 6).to_i64().expect("small") - 1 - 3 * nodes as i64
}

/// Rank of the bundle of quadrics on `P^5` modulo the Plücker quadrics of
/// `G(2,5)`: `C(7,2) - dim ∧^4 C^5`.
pub fn mukai_quadric_rank() -> i64 {
    forms_dim(5, 2).to_i64().expect("small") - binomial(5, 4).to_i64().expect("small")
}

/// Total space for the Mukai model of genus 6: `G(4, ∧^2 C^5)` plus the
/// quadric bundle.
pub fn mukai_total_dim() -> Result<i64> {
    Ok(grass_dim(4, 10)? as i64 + mukai_quadric_rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub name: &'static str,
    pub dim: i64,
    pub derivation: String,
}

fn stratum(name: &'static str, dim: i64, derivation: String) -> Stratum {
    Stratum {
        name,
        dim,
        derivation,
    }
}

/// Stratum dimensions for `g = 4, 5, 6`, each recomputed from its quotient
/// presentation, in decreasing order.
pub fn stratum_dimensions(g: u32) -> Result<Vec<Stratum>> {
    let hyp = stratum(
        "hyperelliptic",
        hyperelliptic_stratum_dim(g),
        format!("{} - dim GL(2)", 2 * g + 3),
    );
    let out = match g {
        6 => vec![
            stratum(
                "M6",
                mukai_total_dim()? - gl_dim(5),
                "dim Y - dim GL(5) = 40 - 25".into(),
            ),
            stratum(
                "trigonal",
                trigonal_stratum_dim(6, 0)?,
                "h0(F0, 3S+4F) - 1 - dim Aut(F0)".into(),
            ),
            stratum(
                "plane quintics",
                plane_curves_dim(5),
                "h0(P2, O(5)) - 1 - dim PGL(3)".into(),
            ),
            hyp,
            stratum("bielliptic", bielliptic_stratum_dim(6), "2g - 2".into()),
        ],
        5 => vec![
            stratum(
                "M5",
                grass_dim(3, 15)? as i64 - pgl_dim(5),
                "dim G(3,15) - dim SL(5)".into(),
            ),
            stratum(
                "trigonal",
                trigonal_stratum_dim(5, 1)?,
                "h0(F1, 3S+2F) - 1 - dim Aut(F1)".into(),
            ),
            hyp,
        ],
        4 => vec![
            stratum(
                "M4",
                trigonal_stratum_dim(4, 0)?,
                "h0(F0, 3S+3F) - 1 - dim Aut(F0)".into(),
            ),
            stratum(
                "Maroni divisor",
                trigonal_stratum_dim(4, 2)?,
                "h0(F2, 3S) - 1 - dim Aut(F2)".into(),
            ),
            hyp,
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "stratifications are tabulated for g = 4, 5, 6, not {g}"
            )))
        }
    };
    Ok(out)
}
