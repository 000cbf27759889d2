use super::{y_from_rho, y_of, P4Solution, RhoSolution, Sign, SymMultiplet};
use crate::error::{Error, Result};
use crate::ratfun::{int, integrate_ratfun, BigRat, Poly, RatFun};
use crate::report::Report;
use crate::weyl::{VTriple, I, J, K};

/// The three ρ-functions `ρ^(n) = ρ + 4(v_n - v_k) x` attached to one
/// solution, with `ν^(n) = -3 v_n` and `μ^(n)` the difference of the other
/// two `v`'s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoFamily {
    v: VTriple,
    rho: [RatFun; 3],
}

impl RhoFamily {
    pub fn new(r: &RhoSolution, mu_sign: Sign) -> Result<Self> {
        let mu = r.mu(mu_sign)?;
        Ok(Self::from_v(&r.rho, VTriple::from_mu_nu(&mu, &r.nu)))
    }

    /// Uses `rho` as `ρ^(k)`.
    pub fn from_v(rho: &RatFun, v: VTriple) -> Self {
        let vk = v.vk().clone();
        let rho = std::array::from_fn(|p| {
            let slope = (&v.as_array()[p] - &vk) * int(4);
            rho + &RatFun::from_poly(Poly::monomial(slope, 1))
        });
        RhoFamily { v, rho }
    }

    pub fn v(&self) -> &VTriple {
        &self.v
    }

    /// `ρ^(n)` by array position (`I`, `J` or `K`).
    pub fn rho(&self, pos: usize) -> &RatFun {
        &self.rho[pos]
    }

    pub fn nu(&self, pos: usize) -> BigRat {
        -(&self.v.as_array()[pos] * int(3))
    }

    pub fn mu_sq(&self, pos: usize) -> BigRat {
        let v = self.v.as_array();
        let d = &v[(pos + 1) % 3] - &v[(pos + 2) % 3];
        &d * &d
    }

    pub fn rho_solution(&self, pos: usize) -> RhoSolution {
        RhoSolution::new(self.rho[pos].clone(), self.mu_sq(pos), self.nu(pos))
    }

    /// `y^(n)_±` with its Painlevé IV parameters.
    pub fn y(&self, pos: usize, sign: Sign) -> Result<P4Solution> {
        y_from_rho(&self.rho_solution(pos), sign)
    }

    /// `f1 = y^(k)_+`, `f2 = y^(j)_-`, `f0 = -2x - f1 - f2`.
    pub fn multiplet(&self) -> Result<SymMultiplet> {
        let f1 = y_of(&self.rho[K], Sign::Plus)?;
        let f2 = y_of(&self.rho[J], Sign::Minus)?;
        let f0 = -(&RatFun::x().scale(&int(2)) + &f1 + &f2);
        Ok(SymMultiplet::new([f0, f1, f2], self.v.alphas()))
    }
}

pub fn build_multiplet(r: &RhoSolution, mu_sign: Sign) -> Result<SymMultiplet> {
    RhoFamily::new(r, mu_sign)?.multiplet()
}

/// `f_j' = f_j (f_{j+1} - f_{j+2}) + α_j` for all `j`, plus `Σf = -2x`, `Σα = -2`.
pub fn verify_symmetric(m: &SymMultiplet) -> Report {
    let mut report = Report::new("symmetric system");
    let f = &m.f;
    for j in 0..3 {
        let rhs = &(&f[j] * &(&f[(j + 1) % 3] - &f[(j + 2) % 3])) + &RatFun::constant(m.alpha[j].clone());
        report.equal(format!("f{j}"), &f[j].derivative(), &rhs);
    }
    let sum_f = &(&f[0] + &f[1]) + &f[2];
    report.equal("sum f = -2x", &sum_f, &RatFun::x().scale(&int(-2)));
    let sum_a = &m.alpha[0] + &m.alpha[1] + &m.alpha[2] + int(2);
    report.zero("sum alpha = -2", Poly::constant(sum_a));
    report
}

/// Bilinear identities `y^(a)_+ y^(b)_- = ρ^(c)'/2` for every ordering of
/// distinct labels, the Riccati forms of `ρ^(n)'`, the average identity
/// `ρ^(n)' + 2ν^(n) = (ρ^(m)' + ρ^(l)')/2`, the cubic product form of each
/// ρ-equation and `f0 = y^(i)_+ + (ln y^(j)_-)'`.
pub fn verify_bilinear_and_riccati(fam: &RhoFamily) -> Result<Report> {
    let mut report = Report::new(format!("bilinear/riccati v = {}", fam.v()));
    let label = |p: usize| p + 1;
    let mut plus = Vec::with_capacity(3);
    let mut minus = Vec::with_capacity(3);
    for p in 0..3 {
        plus.push(y_of(fam.rho(p), Sign::Plus)?);
        minus.push(y_of(fam.rho(p), Sign::Minus)?);
    }
    let d1: Vec<RatFun> = (0..3).map(|p| fam.rho(p).derivative()).collect();
    let half = BigRat::new(1.into(), 2.into());
    let x = RatFun::x();

    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let c = 3 - a - b;
            report.equal(
                format!("y{}+ y{}- = rho{}'/2", label(a), label(b), label(c)),
                &(&plus[a] * &minus[b]),
                &d1[c].scale(&half),
            );
        }
    }

    for p in 0..3 {
        let two_nu = RatFun::constant(fam.nu(p) * int(2));
        let yp = &plus[p];
        let ym = &minus[p];
        let from_plus = yp.derivative() - yp.pow(2) - (&x * yp).scale(&int(2)) - &two_nu;
        let from_minus = -ym.derivative() - ym.pow(2) - (&x * ym).scale(&int(2)) - &two_nu;
        report.equal(format!("riccati y{}+", label(p)), &d1[p], &from_plus);
        report.equal(format!("riccati y{}-", label(p)), &d1[p], &from_minus);

        let avg = (&d1[(p + 1) % 3] + &d1[(p + 2) % 3]).scale(&half);
        report.equal(format!("rho{}' + 2 nu average", label(p)), &(&d1[p] + &two_nu), &avg);

        let core = (&x * &d1[p] - fam.rho(p)).scale(&int(2));
        let d2 = d1[p].derivative();
        let lhs = &(&core + &d2) * &(&core - &d2);
        let rhs = (&(&d1[0] * &d1[1]) * &d1[2]).scale(&int(2));
        report.equal(format!("rho{} cubic product", label(p)), &lhs, &rhs);
    }

    let m = fam.multiplet()?;
    let f0 = &plus[I] + &minus[J].log_derivative()?;
    report.equal("f0 = yi+ + (ln yj-)'", &m.f[0], &f0);
    Ok(report)
}

/// Dressing-chain checks with `σ^(j)` recovered by rational integration of
/// `σ^(j)' = 2(f1 f2 + α1)`. The integration constant is fixed once by
/// requiring `2(xσ' - σ) - σ'' = -2σ' f2`; if no constant does that a
/// failing `integration constant` check records the obstruction.
pub fn verify_dressing_chain(m: &SymMultiplet) -> Result<Report> {
    let (f1, f2) = (&m.f[1], &m.f[2]);
    let sigma_x = (&(f1 * f2) + &RatFun::constant(m.alpha[1].clone())).scale(&int(2));
    let sigma = integrate_ratfun(&sigma_x)?;
    let x = RatFun::x();
    let twice_c = (&sigma_x * f2).scale(&int(2)) + (&x * &sigma_x).scale(&int(2))
        - sigma.scale(&int(2))
        - sigma_x.derivative();
    let mut note = None;
    let sigma = match twice_c.as_constant() {
        Some(c2) => {
            let c = c2 / int(2);
            note = Some(format!("integration constant fixed at {c}"));
            &sigma + &RatFun::constant(c)
        }
        None => sigma,
    };
    let mut report = dressing_chain_report(m, &sigma)?;
    if let Some(n) = note {
        report.note(n);
    } else {
        report.zero("integration constant", twice_c.derivative().num().clone());
    }
    Ok(report)
}

/// Dressing-chain checks for an explicitly supplied `σ^(j)`.
pub fn dressing_chain_report(m: &SymMultiplet, sigma: &RatFun) -> Result<Report> {
    let (f1, f2) = (&m.f[1], &m.f[2]);
    let a1 = RatFun::constant(m.alpha[1].clone());
    let a2 = RatFun::constant(m.alpha[2].clone());
    let x = RatFun::x();
    let mut report = Report::new("dressing chain");

    let s1 = sigma.derivative();
    if s1.is_zero() {
        return Err(Error::DegenerateRho);
    }
    let s2 = s1.derivative();
    let f1f2 = f1 * f2;
    report.equal("sigma_j'", &s1, &(&f1f2 + &a1).scale(&int(2)));

    let core = (&x * &s1 - sigma).scale(&int(2));
    let two_s1 = s1.scale(&int(2));
    let f2_closed = (-(&core - &s2)).div(&two_s1)?;
    report.equal("f2 closed form", f2, &f2_closed);

    let f2bar = f2 - &s1.log_derivative()?;
    let f2bar_closed = (-(&core + &s2)).div(&two_s1)?;
    report.equal("f2bar closed form", &f2bar, &f2bar_closed);

    let transform = (f1 * &(&f1f2 - &a2)).div(&(&f1f2 + &a1))?;
    report.equal("f2bar = f1(f1f2 - a2)/(f1f2 + a1)", &f2bar, &transform);

    let chain_rhs = &s1 - &(a1.scale(&int(2)) + &a2);
    let left = -f2.derivative() - f2.pow(2) - (&x * f2).scale(&int(2));
    let right = f2bar.derivative() - f2bar.pow(2) - (&x * &f2bar).scale(&int(2));
    report.equal("chain (f2 side)", &left, &chain_rhs);
    report.equal("chain (f2bar side)", &right, &chain_rhs);
    report.equal("riccati f2", &left, &(f1f2.scale(&int(2)) - &a2));

    let product = (&f1f2 * &(&f1f2 - &a2)).div(&(&f1f2 + &a1))?;
    report.equal("f2 f2bar", &(f2 * &f2bar), &product);

    let sigma_i = f1f2.scale(&int(2));
    let sigma_k = (&f1f2 - &a2).scale(&int(2));
    let lhs = &(&core + &s2) * &(&core - &s2);
    let rhs = (&(&sigma_i * &s1) * &sigma_k).scale(&int(2));
    report.equal("sigma rho-equation", &lhs, &rhs);
    Ok(report)
}
