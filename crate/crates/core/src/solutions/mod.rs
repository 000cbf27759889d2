//! ρ-functions, Painlevé IV solutions and symmetric multiplets: construction
//! and exact verification.
//!
//! Conventions used throughout:
//!
//! * `y_± = -(2(x ρ_x - ρ) ± ρ_xx) / (2 ρ_x)` solves Painlevé IV with
//!   `a = μ²`, `b = ν ± 1`.
//! * A multiplet is built from `(μ, ν)` through `μ = v_i - v_j`, `ν = -3 v_k`
//!   with `(i, j, k) = (2, 1, 3)`; the three ρ's are `ρ^(n) = ρ + 4 (v_n - v_k) x`.

mod hierarchy;
mod multiplet;
mod verify;

pub use hierarchy::{
    gen_1x, gen_2x, gen_2x3, verify_wkp1, Direction, HierarchyMember, Variant,
};
pub use multiplet::{
    build_multiplet, dressing_chain_report, verify_bilinear_and_riccati, verify_dressing_chain,
    verify_symmetric, RhoFamily,
};
pub use verify::{verify_p4, verify_rho, verify_rho_third_order};

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{int, rat_sqrt, serde_rat, BigRat, Poly, RatFun};

/// A sign choice `±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("expected + or -, got {other:?}"))),
        }
    }
}

/// A ρ-function together with its parameters `μ²` and `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoSolution {
    pub rho: RatFun,
    #[serde(with = "serde_rat")]
    pub mu_sq: BigRat,
    #[serde(with = "serde_rat")]
    pub nu: BigRat,
}

impl RhoSolution {
    pub fn new(rho: RatFun, mu_sq: BigRat, nu: BigRat) -> Self {
        RhoSolution { rho, mu_sq, nu }
    }

    /// `μ = sign · sqrt(μ²)`; fails unless `μ²` is a rational square.
    pub fn mu(&self, sign: Sign) -> Result<BigRat> {
        let root = rat_sqrt(&self.mu_sq).ok_or_else(|| Error::IrrationalMu(self.mu_sq.to_string()))?;
        Ok(root * int(sign.value()))
    }

    /// The seed `ρ^(0) = 8x³/27` with `μ² = 4/9`, `ν = 0`.
    pub fn seed() -> Self {
        RhoSolution::new(
            RatFun::from_poly(Poly::monomial(BigRat::new(8.into(), 27.into()), 3)),
            BigRat::new(4.into(), 9.into()),
            BigRat::zero(),
        )
    }
}

/// A candidate Painlevé IV solution `y(x)` with parameters `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P4Solution {
    pub y: RatFun,
    #[serde(with = "serde_rat")]
    pub a: BigRat,
    #[serde(with = "serde_rat")]
    pub b: BigRat,
}

impl P4Solution {
    pub fn new(y: RatFun, a: BigRat, b: BigRat) -> Self {
        P4Solution { y, a, b }
    }
}

/// `(f0, f1, f2; α0, α1, α2)` for the symmetric system
/// `f_j' = f_j (f_{j+1} - f_{j+2}) + α_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMultiplet {
    pub f: [RatFun; 3],
    pub alpha: [BigRat; 3],
}

impl SymMultiplet {
    pub fn new(f: [RatFun; 3], alpha: [BigRat; 3]) -> Self {
        SymMultiplet { f, alpha }
    }
}

impl Serialize for SymMultiplet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            f0: &'a RatFun,
            f1: &'a RatFun,
            f2: &'a RatFun,
            #[serde(with = "serde_rat")]
            alpha0: &'a BigRat,
            #[serde(with = "serde_rat")]
            alpha1: &'a BigRat,
            #[serde(with = "serde_rat")]
            alpha2: &'a BigRat,
        }
        Raw {
            f0: &self.f[0],
            f1: &self.f[1],
            f2: &self.f[2],
            alpha0: &self.alpha[0],
            alpha1: &self.alpha[1],
            alpha2: &self.alpha[2],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMultiplet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            f0: RatFun,
            f1: RatFun,
            f2: RatFun,
            #[serde(with = "serde_rat")]
            alpha0: BigRat,
            #[serde(with = "serde_rat")]
            alpha1: BigRat,
            #[serde(with = "serde_rat")]
            alpha2: BigRat,
        }
        let r = Raw::deserialize(d)?;
        Ok(SymMultiplet::new(
            [r.f0, r.f1, r.f2],
            [r.alpha0, r.alpha1, r.alpha2],
        ))
    }
}

/// `y_± = -(2(x ρ_x - ρ) ± ρ_xx) / (2 ρ_x)` with `a = μ²`, `b = ν ± 1`.
pub fn y_from_rho(r: &RhoSolution, sign: Sign) -> Result<P4Solution> {
    let y = y_of(&r.rho, sign)?;
    if y.is_zero() {
        return Err(Error::ZeroFunction("y".into()));
    }
    Ok(P4Solution::new(y, r.mu_sq.clone(), &r.nu + int(sign.value())))
}

/// The bare `y_±` map on a ρ-function (no parameter bookkeeping).
pub(crate) fn y_of(rho: &RatFun, sign: Sign) -> Result<RatFun> {
    let r1 = rho.derivative();
    if r1.is_zero() {
        return Err(Error::DegenerateRho);
    }
    let r2 = r1.derivative();
    let core = (&RatFun::x() * &r1 - rho).scale(&int(2));
    let top = match sign {
        Sign::Plus => &core + &r2,
        Sign::Minus => &core - &r2,
    };
    Ok((-top).div(&r1.scale(&int(2)))?)
}

/// Branch of the ρ → ρ̃ = ρ + c x shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftBranch {
    /// `ρ - 2(μ - ν) x`, `ν' = 3μ/2 - ν/2`, `μ' = (μ + ν)/2`.
    I,
    /// `ρ + 2(μ + ν) x`, `ν' = -3μ/2 - ν/2`, `μ' = (μ - ν)/2`.
    J,
}

pub fn rho_shift(r: &RhoSolution, branch: ShiftBranch, mu_sign: Sign) -> Result<RhoSolution> {
    let mu = r.mu(mu_sign)?;
    let nu = &r.nu;
    let half = BigRat::new(1.into(), 2.into());
    let (slope, new_nu, new_mu) = match branch {
        ShiftBranch::I => (
            -(&mu - nu) * int(2),
            &mu * BigRat::new(3.into(), 2.into()) - nu * &half,
            (&mu + nu) * &half,
        ),
        ShiftBranch::J => (
            (&mu + nu) * int(2),
            -(&mu * BigRat::new(3.into(), 2.into())) - nu * &half,
            (&mu - nu) * &half,
        ),
    };
    let rho = &r.rho + &RatFun::from_poly(Poly::monomial(slope, 1));
    Ok(RhoSolution::new(rho, &new_mu * &new_mu, new_nu))
}
