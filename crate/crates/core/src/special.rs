//! Polynomial families feeding the Wronskian hierarchies, and logarithmic
//! derivatives of Wronskians of gauge-weighted families `e^{c x^2} p_i`.
//!
//! The weight is never expanded. Differentiating `e^{c x^2} p` gives
//! `e^{c x^2} (p' + 2 c x p)`, so every row of the gauged Wronskian carries
//! the same factor `e^{c x^2}` and
//!
//! ```text
//! d/dx ln W_k[e^{c x^2} p_1, ..., e^{c x^2} p_k] = 2 k c x + D'/D
//! ```
//!
//! where `D` is the determinant built with the twisted derivative.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{bareiss_det, int, serde_rat, BigRat, Poly, RatFun};

/// `p ↦ p' + 2 c x p`, the derivative conjugated by `e^{c x^2}`.
pub fn twisted_derivative(p: &Poly, c: &BigRat) -> Poly {
    if c.is_zero() {
        return p.derivative();
    }
    &p.derivative() + &p.shift(1).scale(&(c * int(2)))
}

/// Physicists' Hermite polynomial, `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite(n: usize) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::from_ints(&[0, 2]);
    for m in 1..n {
        let next = &cur.shift(1).scale(&int(2)) - &prev.scale(&int(2 * m as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Ĥ_n = e^{-x^2} dⁿ/dxⁿ e^{x^2}`, i.e. `n` twisted derivatives (c = 1) of 1.
pub fn pseudo_hermite(n: usize) -> Poly {
    let one = int(1);
    (0..n).fold(Poly::one(), |p, _| twisted_derivative(&p, &one))
}

/// `F_n^{(k)} = e^{x^2/3} d^{3n+k}/dx^{3n+k} e^{-x^2/3} / (2^n n!)`; the hatted
/// variant flips the sign of the exponent.
pub fn okamoto_poly(n: usize, k: usize, hatted: bool) -> Poly {
    let c = if hatted { BigRat::new(1.into(), 3.into()) } else { BigRat::new((-1).into(), 3.into()) };
    let raw = (0..3 * n + k).fold(Poly::one(), |p, _| twisted_derivative(&p, &c));
    let norm = (1..=n).fold(BigRat::from_integer(1.into()), |acc, m| acc * int(2 * m as i64));
    raw.scale(&norm.recip())
}

/// A Wronskian argument list `[e^{c x^2} p_1, ..., e^{c x^2} p_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugedFamily {
    #[serde(with = "serde_rat")]
    pub gauge: BigRat,
    pub entries: Vec<Poly>,
}

impl GaugedFamily {
    pub fn new(gauge: BigRat, entries: Vec<Poly>) -> Self {
        GaugedFamily { gauge, entries }
    }

    pub fn ungauged(entries: Vec<Poly>) -> Self {
        Self::new(BigRat::zero(), entries)
    }

    /// The polynomial part of the gauged Wronskian (the determinant built
    /// from twisted derivatives).
    pub fn determinant(&self) -> Poly {
        let c = &self.gauge;
        let k = self.entries.len();
        let mut rows = Vec::with_capacity(k);
        let mut current = self.entries.clone();
        for r in 0..k {
            let next = if r + 1 < k {
                current.iter().map(|p| twisted_derivative(p, c)).collect()
            } else {
                Vec::new()
            };
            rows.push(std::mem::replace(&mut current, next));
        }
        bareiss_det(rows)
    }
}

/// `d/dx ln W_k[e^{c x^2} p_1, ..., e^{c x^2} p_k]`.
pub fn gauged_log_wronskian(fam: &GaugedFamily) -> Result<RatFun> {
    if fam.entries.is_empty() {
        return Err(Error::Domain("gauged family must be non-empty".into()));
    }
    let d = fam.determinant();
    if d.is_zero() {
        return Err(Error::SingularFamily);
    }
    let rational = RatFun::from_poly(d).log_derivative()?;
    let k = int(fam.entries.len() as i64);
    let linear = Poly::monomial(&k * &fam.gauge * int(2), 1);
    Ok(&rational + &RatFun::from_poly(linear))
}
