//! The three Wronskian hierarchies of rational solutions.
//!
//! Every member carries its ρ-function, the Painlevé IV solution obtained from
//! it through `y_±`, and independently computed Wronskian-ratio forms of the
//! same `y` so callers can confirm they coincide.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{y_from_rho, P4Solution, RhoSolution, Sign};
use crate::error::{Error, Result};
use crate::ratfun::{int, rat, BigRat, Poly, RatFun};
use crate::report::Report;
use crate::special::{gauged_log_wronskian, hermite, okamoto_poly, pseudo_hermite, GaugedFamily};

/// Direction of the `-2x/3` construction: `+` uses `F`, `-` uses `F̂`.
pub type Direction = Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Variant::One),
            "2" => Ok(Variant::Two),
            other => Err(Error::Parse(format!("variant must be 1 or 2, got {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::One => "1",
            Variant::Two => "2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HierarchyMember {
    pub label: String,
    pub rho: RhoSolution,
    pub y: P4Solution,
    /// Which of `y_±` was taken.
    pub sign: Sign,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Alternative Wronskian-ratio expressions for `y`.
    #[serde(skip)]
    pub forms: Vec<(String, RatFun)>,
}

impl HierarchyMember {
    /// Checks that every alternative form equals `y` exactly.
    pub fn verify_forms(&self) -> Report {
        let mut report = Report::new(format!("{} wronskian forms", self.label));
        for (name, f) in &self.forms {
            report.equal(name.clone(), &self.y.y, f);
        }
        report
    }
}

/// `H_from, H_{from-1}, ..., H_to` (empty when `from < to`).
fn run(from: i64, to: i64, hatted: bool) -> Result<Vec<Poly>> {
    if from >= to && to < 0 {
        return Err(Error::Domain(format!("negative Hermite index {to}")));
    }
    Ok((to..=from)
        .rev()
        .map(|m| if hatted { pseudo_hermite(m as usize) } else { hermite(m as usize) })
        .collect())
}

/// `d/dx ln W[e^{c x²} p...]`, with the empty family contributing zero.
fn log_w(gauge: BigRat, entries: Vec<Poly>) -> Result<RatFun> {
    if entries.is_empty() {
        return Ok(RatFun::zero());
    }
    gauged_log_wronskian(&GaugedFamily::new(gauge, entries))
}

fn log_ratio(top: Vec<Poly>, bottom: Vec<Poly>) -> Result<RatFun> {
    Ok(log_w(BigRat::from_integer(0.into()), top)? - log_w(BigRat::from_integer(0.into()), bottom)?)
}

fn linear(c: BigRat) -> RatFun {
    RatFun::from_poly(Poly::monomial(c, 1))
}

fn member(
    label: String,
    rho: RhoSolution,
    sign: Sign,
    notes: Vec<String>,
    forms: Vec<(String, RatFun)>,
) -> Result<HierarchyMember> {
    let y = y_from_rho(&rho, sign)?;
    Ok(HierarchyMember { label, rho, y, sign, notes, forms })
}

/// The `-2x` hierarchy: `ρ = 2 ∂ ln W_k[H_n, ..., H_{n-k+1}]` with
/// `ν = n - 2k + 1`, `μ² = (n+1)²` and `y = y_-`; the hatted twin uses `Ĥ`
/// with `ν = -n + 2k - 1`.
pub fn gen_2x(k: u32, n: u32, hatted: bool) -> Result<HierarchyMember> {
    if k < 1 {
        return Err(Error::Domain("k ≥ 1 required".into()));
    }
    if n + 1 < k {
        return Err(Error::Domain("n ≥ k - 1 required".into()));
    }
    let (k, n) = (k as i64, n as i64);
    let rho = log_w(int(0), run(n, n - k + 1, hatted)?)?.scale(&int(2));
    let nu = if hatted { int(-n + 2 * k - 1) } else { int(n - 2 * k + 1) };
    let rho = RhoSolution::new(rho, int((n + 1) * (n + 1)), nu);

    let mut notes = vec!["y = y_- (b = nu - 1)".to_string()];
    if k == 1 {
        notes.push("k = 1: single-entry Wronskian".into());
    }
    let two_x = linear(int(2));
    let mut forms = Vec::new();
    if !hatted && n >= k {
        let r = log_ratio(run(n, n - k, false)?, run(n, n - k + 1, false)?)?;
        forms.push(("W_{k+1}/W_k ratio".to_string(), r - &two_x));
    }
    if hatted {
        let r = log_ratio(run(n, n - k + 1, true)?, run(n, n - k + 2, true)?)?;
        forms.push(("hatted W_k/W_{k-1} ratio".to_string(), -r - &two_x));
    }
    let label = format!("{}(k={k},n={n})", if hatted { "2x-hat" } else { "2x" });
    member(label, rho, Sign::Minus, notes, forms)
}

/// The `-1/x` hierarchy built from gauged Hermite families; `y = y_+` with
/// `b = ν + 1`.
pub fn gen_1x(k: u32, n: u32, variant: Variant, hatted: bool) -> Result<HierarchyMember> {
    if k < 1 {
        return Err(Error::Domain("k ≥ 1 required".into()));
    }
    if n < k {
        return Err(Error::Domain("n ≥ k required".into()));
    }
    let (k, n) = (k as i64, n as i64);
    let (gauge, entries, nu, mu_sq) = match (variant, hatted) {
        (Variant::One, false) => (-1, run(n, n - k + 1, false)?, n + k + 1, (n - k + 1).pow(2)),
        (Variant::Two, false) => (1, run(n, k, true)?, -2 * n + k - 2, k * k),
        (Variant::One, true) => (-1, run(n, k, false)?, 2 * n - k + 2, k * k),
        (Variant::Two, true) => (1, run(n, n - k + 1, true)?, -n - k - 1, (n - k + 1).pow(2)),
    };
    let rho = log_w(int(gauge), entries)?.scale(&int(2));
    let rho = RhoSolution::new(rho, int(mu_sq), int(nu));

    let forms = match (variant, hatted) {
        (Variant::One, false) => vec![
            ("W_k[H]/W_{k+1}[H]", log_ratio(run(n, n - k + 1, false)?, run(n + 1, n - k + 1, false)?)?),
            ("W[Hh]/W[Hh] shifted", log_ratio(run(n, k, true)?, run(n + 1, k + 1, true)?)?),
        ],
        (Variant::Two, false) => {
            let (kp, np) = (n - k, n - 1);
            vec![
                ("W[Hh]/W[Hh] lowered", log_ratio(run(n, k, true)?, run(n - 1, k, true)?)?),
                ("W_k[H]/W_k[H] lowered", log_ratio(run(n, n - k + 1, false)?, run(n - 1, n - k, false)?)?),
                ("reindexed W[Hh] ratio", log_ratio(run(np + 1, np - kp + 1, true)?, run(np, np - kp + 1, true)?)?),
                ("reindexed W[H] ratio", log_ratio(run(np + 1, kp + 1, false)?, run(np, kp, false)?)?),
            ]
        }
        (Variant::One, true) => vec![
            ("W[H]/W[H] extended", log_ratio(run(n, k, false)?, run(n + 1, k, false)?)?),
            ("W_k[Hh]/W_k[Hh] shifted", log_ratio(run(n, n - k + 1, true)?, run(n + 1, n - k + 2, true)?)?),
        ],
        (Variant::Two, true) => vec![
            ("W_k[Hh]/W_{k-1}[Hh]", log_ratio(run(n, n - k + 1, true)?, run(n - 1, n - k + 1, true)?)?),
            ("W[H]/W[H] lowered", log_ratio(run(n, k, false)?, run(n - 1, k - 1, false)?)?),
        ],
    };
    let forms = forms.into_iter().map(|(s, f)| (s.to_string(), f)).collect();
    let label = format!("1x{}/{variant}(k={k},n={n})", if hatted { "-hat" } else { "" });
    member(label, rho, Sign::Plus, vec!["y = y_+ (b = nu + 1)".into()], forms)
}

/// `y_{-,(k,n)} + y^(1)_{(k,n)} + y^(2)_{(k,n)} = -2x - (ln y_{-,(k,n)})'`.
pub fn verify_wkp1(k: u32, n: u32, hatted: bool) -> Result<Report> {
    let ym = gen_2x(k, n, hatted)?.y.y;
    let y1 = gen_1x(k, n, Variant::One, hatted)?.y.y;
    let y2 = gen_1x(k, n, Variant::Two, hatted)?.y.y;
    let mut report = Report::new(format!("sum identity (k={k}, n={n}, hatted={hatted})"));
    let lhs = &(&ym + &y1) + &y2;
    let rhs = -(linear(int(2)) + ym.log_derivative()?);
    report.equal("y- + y1 + y2 = -2x - (ln y-)'", &lhs, &rhs);
    Ok(report)
}

fn okamoto_entries(n: usize, k: usize, first: usize, second: usize, hatted: bool) -> Vec<Poly> {
    (0..n)
        .map(|i| okamoto_poly(i, first, hatted))
        .chain((0..k).map(|i| okamoto_poly(i, second, hatted)))
        .collect()
}

/// The `-2x/3` hierarchy `ρ^{(variant, ±n, ±k)}` built on
/// `ρ^(1) = 8x³/27 - 4x/3` or `ρ^(2) = 8x³/27 + 4x/3`.
///
/// Direction `+` uses `F` blocks and `y_+`; direction `-` uses `F̂` blocks and
/// `y_-`.
pub fn gen_2x3(variant: Variant, n: u32, k: u32, direction: Direction) -> Result<HierarchyMember> {
    let (nu_, ku) = (n as usize, k as usize);
    let (n, k) = (n as i64, k as i64);
    let base_slope = match variant {
        Variant::One => rat(-4, 3),
        Variant::Two => rat(4, 3),
    };
    let base = RatFun::from_poly(Poly::new(vec![int(0), base_slope, int(0), rat(8, 27)]));
    let hatted = direction == Sign::Minus;
    let second = match (variant, direction) {
        (Variant::One, Sign::Plus) | (Variant::Two, Sign::Minus) => 2,
        _ => 0,
    };
    let step = rat((n - 2 * k) * 4 * direction.value(), 3);
    let third = rat(1, 3);
    let (mu, nu) = match (variant, direction) {
        (Variant::One, Sign::Plus) => (&third + int(n), 1 - n + 2 * k),
        (Variant::Two, Sign::Plus) => (&third - int(n), -1 - n + 2 * k),
        (Variant::One, Sign::Minus) => (&third - int(n), 1 + n - 2 * k),
        (Variant::Two, Sign::Minus) => (&third + int(n), -1 + n - 2 * k),
    };
    let lw = log_w(int(0), okamoto_entries(nu_, ku, 1, second, hatted))?;
    let rho = &(&base + &linear(step)) + &lw.scale(&int(2));
    let rho = RhoSolution::new(rho, &mu * &mu, int(nu));

    let ratio = log_ratio(
        okamoto_entries(nu_, ku + 1, 1, second, hatted),
        okamoto_entries(nu_, ku, 1, second, hatted),
    )?;
    let signed = if hatted { ratio } else { -ratio };
    let form = signed - linear(rat(2, 3));
    let label = format!("2x3/{variant}({}{n},{}{k})", direction, direction);
    member(
        label,
        rho,
        direction,
        vec![format!("y = y_{direction} (b = nu {direction} 1)")],
        vec![("consecutive F-Wronskian ratio".into(), form)],
    )
}
