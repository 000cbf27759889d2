use num_traits::Zero;

use super::{BigRat, Poly, RatFun};
use crate::error::{Error, Result};

/// Rational antiderivative of `f`.
///
/// Polynomial division splits off the polynomial part; the proper part is
/// reduced by Horowitz–Ostrogradsky: with `D = gcd(Q, Q')` and `E = Q / D`,
/// `∫ R/Q = A/D + ∫ B/E` where `B/E` has a squarefree denominator, so the
/// antiderivative is rational iff `B = 0`.
///
/// The free constant is fixed so that `F(0) = 0` when `F` is finite at 0,
/// otherwise the polynomial part carries no constant term.
pub fn integrate_ratfun(f: &RatFun) -> Result<RatFun> {
    let (quot, rem) = f.num().div_rem(f.den());
    let poly_part = RatFun::from_poly(quot.integral());
    if rem.is_zero() {
        return Ok(poly_part);
    }

    let q = f.den();
    let dq = q.derivative();
    let d = q.gcd(&dq);
    let e = q.exact_div(&d).expect("gcd divides");
    // H = E * D' / D is a polynomial.
    let h = (&e * &d.derivative())
        .exact_div(&d)
        .expect("D divides E * D'");

    let m = d.degree().unwrap_or(0);
    let ne = e.degree().unwrap_or(0);
    let n = m + ne;
    debug_assert_eq!(Some(n), q.degree());

    // Columns of the linear system rem = A' E - A H + B D.
    let mut columns: Vec<Poly> = Vec::with_capacity(n);
    for t in 0..m {
        let xt = Poly::monomial(BigRat::from_integer(1.into()), t);
        let da = xt.derivative();
        columns.push(&(&da * &e) - &(&xt * &h));
    }
    for t in 0..ne {
        columns.push(d.shift(t));
    }

    let matrix: Vec<Vec<BigRat>> = (0..n)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs: Vec<BigRat> = (0..n).map(|row| rem.coeff(row)).collect();
    let sol = solve_square(matrix, rhs).expect("Horowitz–Ostrogradsky system is nonsingular");

    let (a_coeffs, b_coeffs) = sol.split_at(m);
    if b_coeffs.iter().any(|c| !c.is_zero()) {
        return Err(Error::NonRationalIntegral);
    }
    let a = Poly::new(a_coeffs.to_vec());
    let rational = RatFun::new(a, d)?;
    let mut out = &poly_part + &rational;
    if let Some(at_zero) = out.eval(&BigRat::zero()) {
        out = &out - &RatFun::constant(at_zero);
    }
    Ok(out)
}

/// Gaussian elimination over Q; `None` if the matrix is singular.
fn solve_square(mut a: Vec<Vec<BigRat>>, mut b: Vec<BigRat>) -> Option<Vec<BigRat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in col..n {
                let t = &factor * &a[col][j];
                a[r][j] -= t;
            }
            let t = &factor * &b[col];
            b[r] -= t;
        }
    }
    Some(b)
}
