//! Okamoto-type Hamiltonian frames
//! `H = 2P²Q - ε(Q² + 2xQ + 2(v_j - v_i))P + (v_k - v_i)Q - 2 v_i x`.
//!
//! A frame is rebuilt from a ρ-function through `H = (ρ - 4 v_k x)/2` and
//!
//! ```text
//! Q = (2(xH' - H) - εH'') / (-2(H' + 2v_k))
//! P = (2(xH' - H) + εH'') / (4ε(H' + 2v_j))
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{int, rat, rat_sqrt, BigRat, Poly, RatFun};
use crate::report::Report;
use crate::solutions::{verify_rho, P4Solution, RhoSolution, Sign};
use crate::weyl::{act_params, Letter, VTriple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonianFrame {
    pub epsilon: Sign,
    pub v: VTriple,
    pub h: RatFun,
    pub q: RatFun,
    pub p: RatFun,
}

impl HamiltonianFrame {
    /// Rebuilds `Q` and `P` for a given `H`.
    pub fn from_hamiltonian(h: RatFun, v: VTriple, epsilon: Sign) -> Result<Self> {
        let eps = int(epsilon.value());
        let h1 = h.derivative();
        let h2 = h1.derivative();
        let core = (&RatFun::x() * &h1 - &h).scale(&int(2));
        let den_q = (&h1 + &RatFun::constant(v.vk() * int(2))).scale(&int(-2));
        let den_p = (&h1 + &RatFun::constant(v.vj() * int(2))).scale(&(&eps * int(4)));
        if den_q.is_zero() {
            return Err(Error::DegenerateDenominator("Q".into()));
        }
        if den_p.is_zero() {
            return Err(Error::DegenerateDenominator("P".into()));
        }
        let q = (&core - &h2.scale(&eps)).div(&den_q)?;
        let p = (&core + &h2.scale(&eps)).div(&den_p)?;
        Ok(HamiltonianFrame { epsilon, v, h, q, p })
    }

    /// `ρ^(k) = 2H + 4 v_k x`.
    pub fn rho(&self) -> RatFun {
        &self.h.scale(&int(2)) + &RatFun::from_poly(Poly::monomial(self.v.vk() * int(4), 1))
    }

    /// `(a, b) = ((v_j - v_i)², -ε - 3 v_k)`.
    pub fn p4_params(&self) -> (BigRat, BigRat) {
        let d = self.v.vj() - self.v.vi();
        (&d * &d, -int(self.epsilon.value()) - self.v.vk() * int(3))
    }

    /// `Q` viewed as a Painlevé IV solution.
    pub fn p4_solution(&self) -> P4Solution {
        let (a, b) = self.p4_params();
        P4Solution::new(self.q.clone(), a, b)
    }
}

pub fn frame_from_rho(r: &RhoSolution, epsilon: Sign, mu_sign: Sign) -> Result<HamiltonianFrame> {
    let v = VTriple::from_mu_nu(&r.mu(mu_sign)?, &r.nu);
    let h = (&r.rho - &RatFun::from_poly(Poly::monomial(v.vk() * int(4), 1))).scale(&rat(1, 2));
    HamiltonianFrame::from_hamiltonian(h, v, epsilon)
}

pub fn verify_hamilton(f: &HamiltonianFrame) -> Report {
    let mut report = Report::new(format!("hamiltonian frame (epsilon = {}, v = {})", f.epsilon, f.v));
    let eps = int(f.epsilon.value());
    let (vi, vj, vk) = (f.v.vi(), f.v.vj(), f.v.vk());
    let (q, p, h) = (&f.q, &f.p, &f.h);
    let x = RatFun::x();
    let c = |b: BigRat| RatFun::constant(b);
    let qp = q * p;

    let quad_q = &(&q.pow(2) + &(&x * q).scale(&int(2))) + &c((vj - vi) * int(2));
    report.equal("Q_x", &q.derivative(), &(qp.scale(&int(4)) - quad_q.scale(&eps)));

    let px = -p.pow(2).scale(&int(2)) + (&qp + &(&x * p)).scale(&(&eps * int(2))) - c(vk - vi);
    report.equal("P_x", &p.derivative(), &px);

    let ham = (&p.pow(2) * q).scale(&int(2)) - (&quad_q * p).scale(&eps) + q.scale(&(vk - vi))
        - x.scale(&(vi * int(2)));
    report.equal("H(Q, P, x)", h, &ham);

    let h1 = h.derivative();
    let h2 = h1.derivative();
    report.equal("H_x", &h1, &(qp.scale(&(&eps * int(-2))) - c(vi * int(2))));
    report.equal("2QP", &qp.scale(&int(2)), &(&h1 + &c(vi * int(2))).scale(&-eps.clone()));

    let core = (&x * &h1 - h).scale(&int(2));
    let shifted = |vn: &BigRat| &h1 + &c(vn * int(2));
    let lhs = &(&core - &h2) * &(&core + &h2);
    let rhs = (&(&shifted(vi) * &shifted(vj)) * &shifted(vk)).scale(&int(4));
    report.equal("quadratic identity", &lhs, &rhs);

    let xhh = &(-(q * &shifted(vk))) + &(p * &shifted(vj)).scale(&(&eps * int(2)));
    report.equal("2(xH_x - H)", &core, &xhh);

    let r = RhoSolution::new(f.rho(), (vi - vj) * (vi - vj), -(vk * int(3)));
    let rho_report = verify_rho(&r, &int(0));
    if let Some(check) = rho_report.check("factorized") {
        report.zero("rho-equation of 2H + 4 v_k x", check.residual.clone());
    }
    report
}

/// Exchanges two `v`'s, keeps `H` and recomputes `Q`, `P`.
pub fn pi_on_frame(perm: Letter, f: &HamiltonianFrame) -> Result<HamiltonianFrame> {
    if !matches!(perm, Letter::Swap(..)) {
        return Err(Error::Domain(format!("{perm} is not a transposition")));
    }
    HamiltonianFrame::from_hamiltonian(f.h.clone(), act_params(perm, &f.v), f.epsilon)
}

/// `b' = -3ε/2 - b/2 + (3/2)η√a`, `a' = (b + ε + η√a)²/4` for `η = ±1`.
pub fn lukashevich_relabel(a: &BigRat, b: &BigRat, epsilon: Sign, eta: Sign) -> Result<(BigRat, BigRat)> {
    let root = rat_sqrt(a).ok_or_else(|| Error::IrrationalMu(a.to_string()))? * int(eta.value());
    let eps = int(epsilon.value());
    let new_b = -(&eps * rat(3, 2)) - b / int(2) + &root * rat(3, 2);
    let s = b + &eps + &root;
    Ok((&s * &s / int(4), new_b))
}

/// Checks that the `(a, b)` pair of `after` is a Lukashevich relabelling of
/// the pair of `before` for one of the two choices of `η`.
pub fn verify_relabel(before: &HamiltonianFrame, after: &HamiltonianFrame) -> Result<Report> {
    let (a, b) = before.p4_params();
    let target = after.p4_params();
    let mut report = Report::new("lukashevich relabelling");
    let mut best = None;
    for eta in [Sign::Plus, Sign::Minus] {
        let got = lukashevich_relabel(&a, &b, before.epsilon, eta)?;
        let residual = Poly::new(vec![&got.0 - &target.0, &got.1 - &target.1]);
        if residual.is_zero() {
            report.note(format!("eta = {eta}"));
            best = Some(residual);
            break;
        }
        best.get_or_insert(residual);
    }
    report.zero("(a, b) relabel", best.unwrap_or_else(Poly::zero));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::{verify_p4, y_from_rho};

    fn rho22() -> RhoSolution {
        let rho = RatFun::new(Poly::from_ints(&[0, 8]), Poly::from_ints(&[1, 0, 2])).unwrap();
        RhoSolution::new(rho, int(9), int(-1))
    }

    fn rho11() -> RhoSolution {
        RhoSolution::new(RatFun::new(Poly::from_ints(&[2]), Poly::x()).unwrap(), int(4), int(0))
    }

    #[test]
    fn frames_verify() {
        for r in [RhoSolution::seed(), rho22(), rho11()] {
            for eps in [Sign::Plus, Sign::Minus] {
                for mu in [Sign::Plus, Sign::Minus] {
                    let f = frame_from_rho(&r, eps, mu).unwrap();
                    let rep = verify_hamilton(&f);
                    assert!(rep.passed(), "{rep}");
                    assert_eq!(f.rho(), r.rho);
                    assert!(verify_p4(&f.p4_solution()).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn q_matches_y_branches() {
        let r = RhoSolution::seed();
        let minus = frame_from_rho(&r, Sign::Minus, Sign::Plus).unwrap();
        assert_eq!(minus.q, y_from_rho(&r, Sign::Plus).unwrap().y);
        let plus = frame_from_rho(&r, Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(plus.q, y_from_rho(&r, Sign::Minus).unwrap().y);
    }

    #[test]
    fn shifted_hamiltonian_breaks_quadratic_identity() {
        let f = frame_from_rho(&RhoSolution::seed(), Sign::Plus, Sign::Plus).unwrap();
        let mut g = f.clone();
        g.h = &g.h + &RatFun::one();
        let rep = verify_hamilton(&g);
        assert!(!rep.check("quadratic identity").unwrap().passed());
        let rebuilt = HamiltonianFrame::from_hamiltonian(g.h.clone(), g.v.clone(), g.epsilon).unwrap();
        assert!(!verify_hamilton(&rebuilt).check("quadratic identity").unwrap().passed());
    }

    #[test]
    fn permutations() {
        let f = frame_from_rho(&RhoSolution::seed(), Sign::Plus, Sign::Plus).unwrap();
        let pi13 = Letter::Swap(1, 3);
        let twice = pi_on_frame(pi13, &pi_on_frame(pi13, &f).unwrap()).unwrap();
        assert_eq!(twice, f);
        for perm in [Letter::Swap(1, 2), Letter::Swap(1, 3), Letter::Swap(2, 3)] {
            let g = pi_on_frame(perm, &f).unwrap();
            assert_eq!(g.h, f.h);
            assert!(verify_hamilton(&g).passed(), "{perm}");
            assert!(verify_p4(&g.p4_solution()).unwrap().passed(), "{perm}");
        }
        let g = pi_on_frame(Letter::Swap(2, 3), &f).unwrap();
        let rep = verify_relabel(&f, &g).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(pi_on_frame(Letter::Rotation { inverse: false }, &f).is_err());
    }
}
