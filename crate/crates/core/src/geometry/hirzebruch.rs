use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{int, rat, Rational};
use crate::error::{Error, Result};

/// `aE + bF` on the Hirzebruch surface `F_n`, where `E^2 = -n`, `F^2 = 0`
/// and `E·F = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HirzebruchClass {
    pub n: u32,
    pub a: i64,
    pub b: i64,
}

impl HirzebruchClass {
    pub fn new(n: u32, a: i64, b: i64) -> Self {
        HirzebruchClass { n, a, b }
    }

    /// The negative section.
    pub fn e(n: u32) -> Self {
        Self::new(n, 1, 0)
    }

    pub fn f(n: u32) -> Self {
        Self::new(n, 0, 1)
    }

    /// Section disjoint from `E`: `S = E + nF`.
    pub fn s(n: u32) -> Self {
        Self::new(n, 1, n as i64)
    }

    /// `K = -2E - (n+2)F`.
    pub fn canonical(n: u32) -> Self {
        Self::new(n, -2, -(n as i64) - 2)
    }

    /// `pS + qF` written in the `E, F` basis.
    pub fn from_sf(n: u32, p: i64, q: i64) -> Self {
        Self::new(n, p, p * n as i64 + q)
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        same_surface(self, other)?;
        Ok(Self::new(self.n, self.a + other.a, self.b + other.b))
    }

    pub fn times(&self, k: i64) -> Self {
        Self::new(self.n, k * self.a, k * self.b)
    }
}

impl fmt::Display for HirzebruchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}E + {}F on F_{}", self.a, self.b, self.n)
    }
}

fn same_surface(x: &HirzebruchClass, y: &HirzebruchClass) -> Result<()> {
    if x.n != y.n {
        return Err(Error::SurfaceMismatch(x.n, y.n));
    }
    Ok(())
}

/// `(aE + bF)·(cE + dF) = -n·ac + ad + bc`.
pub fn intersect(x: &HirzebruchClass, y: &HirzebruchClass) -> Result<i64> {
    same_surface(x, y)?;
    Ok(-(x.n as i64) * x.a * y.a + x.a * y.b + x.b * y.a)
}

/// Arithmetic genus from adjunction, `2g - 2 = C·(C + K)`.
pub fn genus_of_class(c: &HirzebruchClass) -> Rational {
    genus_of_formal(c.n, &int(c.a), &int(c.b))
}

/// Adjunction genus of `aE + bF` with rational coefficients.
pub fn genus_of_formal(n: u32, a: &Rational, b: &Rational) -> Rational {
    let n = int(n as i64);
    let (ka, kb) = (int(-2), -(&n + int(2)));
    let form = |a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational| {
        -(&n * a1 * a2) + a1 * b2 + b1 * a2
    };
    let ck = form(a, b, &(a + &ka), &(b + &kb));
    ck / int(2) + int(1)
}

/// Coefficient `k` with `3S + kF` of genus `g` on `F_n`, found by solving the
/// adjunction formula, which is affine in `k`. It is an integer exactly when
/// `g` and `n` have the same parity.
pub fn solve_scroll_coefficient(g: u32, n: u32) -> Rational {
    let three = int(3);
    let at = |k: &Rational| genus_of_formal(n, &three, &(int(3 * n as i64) + k));
    let g0 = at(&int(0));
    let slope = at(&int(1)) - &g0;
    (int(g as i64) - g0) / slope
}

/// Is there a trigonal curve of genus `g` with Maroni invariant `n`?
/// Requires `g ≡ n (mod 2)` and `n <= (g + 2)/3`.
pub fn trigonal_maroni_valid(g: u32, n: u32) -> bool {
    let k = solve_scroll_coefficient(g, n);
    k.is_integer() && k >= rat(0, 1)
}

/// `h^0(F_n, O(aE + bF)) = sum_{j=0}^{a} max(0, b - jn + 1)` for `a >= 0`.
pub fn h0_hirzebruch(c: &HirzebruchClass) -> Result<BigInt> {
    if c.a < 0 {
        return Err(Error::Guard(format!("h0 of {c} with negative E-coefficient")));
    }
    Ok((0..=c.a)
        .map(|j| BigInt::from((c.b - j * c.n as i64 + 1).max(0)))
        .sum())
}

/// `dim Aut(F_n)`: 6 for `P^1 x P^1`, `n + 5` otherwise.
pub fn aut_dim(n: u32) -> i64 {
    if n == 0 {
        6
    } else {
        n as i64 + 5
    }
}
