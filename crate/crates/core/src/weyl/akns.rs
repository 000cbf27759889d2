//! Darboux–Bäcklund maps in the AKNS variables `(J, J̄)`, their square roots
//! on `(ȷ, ȷ̄)`, the Miura map linking the two, and the induced action on a
//! single Painlevé IV solution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{int, BigRat, RatFun};
use crate::solutions::{P4Solution, Sign};

/// `J = (ln q)_x`, `J̄ = -rq`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JPair {
    pub j: RatFun,
    pub jbar: RatFun,
}

/// The Miura variables `(ȷ, ȷ̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LittleJPair {
    pub j: RatFun,
    pub jbar: RatFun,
}

fn log_d(f: &RatFun, what: &str) -> Result<RatFun> {
    if f.is_zero() {
        return Err(Error::ZeroFunction(what.into()));
    }
    f.log_derivative()
}

/// `J = -ȷ - ȷ̄ + ȷ_x/ȷ`, `J̄ = ȷ̄ ȷ`.
pub fn miura(lj: &LittleJPair) -> Result<JPair> {
    let l = log_d(&lj.j, "j")?;
    Ok(JPair {
        j: &(-(&lj.j + &lj.jbar)) + &l,
        jbar: &lj.jbar * &lj.j,
    })
}

/// `G`: `J → J + (ln(J̄ + J_x))_x`, `J̄ → J̄ + J_x`;
/// `G⁻¹`: `J → J - (ln J̄)_x`, `J̄ → J̄ + (ln J̄)_xx - J_x`.
pub fn db_on_j(p: &JPair, direction: Sign) -> Result<JPair> {
    let jx = p.j.derivative();
    match direction {
        Sign::Plus => {
            let jbar = &p.jbar + &jx;
            let l = log_d(&jbar, "Jbar + J_x")?;
            Ok(JPair { j: &p.j + &l, jbar })
        }
        Sign::Minus => {
            let l = log_d(&p.jbar, "Jbar")?;
            Ok(JPair {
                j: &p.j - &l,
                jbar: &(&p.jbar + &l.derivative()) - &jx,
            })
        }
    }
}

/// `g`: `ȷ → ȷ̄ - ȷ_x/ȷ`, `ȷ̄ → ȷ`; `g⁻¹`: `ȷ → ȷ̄`, `ȷ̄ → ȷ + ȷ̄_x/ȷ̄`.
pub fn g_on_littlej(lj: &LittleJPair, direction: Sign) -> Result<LittleJPair> {
    match direction {
        Sign::Plus => Ok(LittleJPair {
            j: &lj.jbar - &log_d(&lj.j, "j")?,
            jbar: lj.j.clone(),
        }),
        Sign::Minus => Ok(LittleJPair {
            j: lj.jbar.clone(),
            jbar: &lj.j + &log_d(&lj.jbar, "jbar")?,
        }),
    }
}

/// `G(y) = y - (ln(y_x + y² + 2xy + 2ν + 4))_x` with `b → b + 2`, and
/// `G⁻¹(y) = y + (ln(y_x - y² - 2xy - 2ν))_x` with `b → b - 2`.
pub fn db_on_y(s: &P4Solution, nu: &BigRat, direction: Sign) -> Result<P4Solution> {
    let y = &s.y;
    let quad = &y.pow(2) + &(&RatFun::x() * y).scale(&int(2));
    let (arg, what) = match direction {
        Sign::Plus => (
            &(&y.derivative() + &quad) + &RatFun::constant(nu * int(2) + int(4)),
            "y_x + y^2 + 2xy + 2nu + 4",
        ),
        Sign::Minus => (
            &(&y.derivative() - &quad) - &RatFun::constant(nu * int(2)),
            "y_x - y^2 - 2xy - 2nu",
        ),
    };
    let l = log_d(&arg, what)?;
    let out = match direction {
        Sign::Plus => y - &l,
        Sign::Minus => y + &l,
    };
    if out.is_zero() {
        return Err(Error::ZeroFunction("transformed y".into()));
    }
    Ok(P4Solution::new(out, s.a.clone(), &s.b + int(2 * direction.value())))
}
