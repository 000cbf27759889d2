use num_traits::{One, Signed, Zero};

use super::{BigRat, Poly, RatFun};

pub fn rat_latex(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Expanded polynomial in descending powers with exact coefficients.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if i == 0 || !abs.is_one() {
            out.push_str(&rat_latex(&abs));
        }
        match i {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{{{i}}}")),
        }
    }
    out
}

pub fn ratfun_latex(f: &RatFun) -> String {
    if f.is_polynomial() {
        poly_latex(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(f.num()), poly_latex(f.den()))
    }
}
