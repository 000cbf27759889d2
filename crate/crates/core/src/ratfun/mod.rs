//! Exact arithmetic kernel: rationals, dense univariate polynomials over Q,
//! normalized rational functions, Wronskians and rational integration.

mod func;
mod integrate;
mod json;
mod latex;
mod poly;
mod wronskian;

pub use func::{log_derivative, ratfun_arith, ArithOp, RatFun};
pub use integrate::integrate_ratfun;
pub use json::{parse_rat, rat_to_string, serde_rat};
pub use latex::{poly_latex, rat_latex, ratfun_latex};
pub use poly::Poly;
pub use wronskian::{bareiss_det, wronskian};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational. Always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, if it is the square of a rational.
/// Returns the non-negative root.
pub fn rat_sqrt(q: &BigRat) -> Option<BigRat> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRat::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRat::new(n, d))
    } else {
        None
    }
}
