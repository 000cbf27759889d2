use num_traits::Zero;

use super::{P4Solution, RhoSolution};
use crate::error::{Error, Result};
use crate::ratfun::{int, BigRat, Poly, RatFun};
use crate::report::Report;

/// Checks `2 y y'' - y'² - 3y⁴ - 8x y³ - 4(x² + b) y² + 4a = 0`.
///
/// With `y = N/D`, `A = N'D - ND'` and `B = (N''D - ND'')D - 2D'A`, the
/// left-hand side times `D⁴` is the polynomial
/// `2NB - A² - 3N⁴ - 8xN³D - 4(x² + b)N²D² + 4aD⁴`, which is the residual.
pub fn verify_p4(s: &P4Solution) -> Result<Report> {
    if s.y.is_zero() {
        return Err(Error::ZeroFunction("y".into()));
    }
    let mut report = Report::new(format!("painleve-iv(a = {}, b = {})", s.a, s.b));
    report.zero("painleve-iv", p4_residual(s.y.num(), s.y.den(), &s.a, &s.b));
    Ok(report)
}

pub(crate) fn p4_residual(n: &Poly, d: &Poly, a: &BigRat, b: &BigRat) -> Poly {
    let n1 = n.derivative();
    let d1 = d.derivative();
    let aa = &(&n1 * d) - &(n * &d1);
    let bb = &(&(&(&n1.derivative() * d) - &(n * &d1.derivative())) * d) - &(&d1 * &aa).scale(&int(2));
    let n2 = n * n;
    let d2 = d * d;
    let x_sq_b = Poly::new(vec![b.clone(), BigRat::zero(), int(1)]);
    let mut r = (n * &bb).scale(&int(2));
    r = &r - &(&aa * &aa);
    r = &r - &(&n2 * &n2).scale(&int(3));
    r = &r - &(&(&n2 * n) * d).shift(1).scale(&int(8));
    r = &r - &(&(&x_sq_b * &n2) * &d2).scale(&int(4));
    &r + &(&d2 * &d2).scale(&(a * int(4)))
}

/// Checks `ρ''² = 4(xρ' - ρ)² - 2ρ'³ - 8νρ'² + 8(μ² - ν²)ρ' - 8C`; for `C = 0`
/// also the factorized form
/// `(2(xρ' - ρ) + ρ'')(2(xρ' - ρ) - ρ'') = 2ρ'((ρ' + 2ν)² - 4μ²)`.
pub fn verify_rho(r: &RhoSolution, c: &BigRat) -> Report {
    let mut report = Report::new(format!("rho(mu^2 = {}, nu = {}, C = {c})", r.mu_sq, r.nu));
    let r1 = r.rho.derivative();
    let r2 = r1.derivative();
    let core = &RatFun::x() * &r1 - &r.rho;
    let nu = &r.nu;
    let rhs = core.pow(2).scale(&int(4)) - r1.pow(3).scale(&int(2)) - r1.pow(2).scale(&(nu * int(8)))
        + r1.scale(&((&r.mu_sq - nu * nu) * int(8)))
        - RatFun::constant(c * int(8));
    report.equal("second-order", &r2.pow(2), &rhs);
    if c.is_zero() {
        let twice = core.scale(&int(2));
        let lhs = &(&twice + &r2) * &(&twice - &r2);
        let shifted = &r1 + &RatFun::constant(nu * int(2));
        let rhs = (&r1 * &(shifted.pow(2) - RatFun::constant(&r.mu_sq * int(4)))).scale(&int(2));
        report.equal("factorized", &lhs, &rhs);
    }
    report
}

/// Checks `-x²ρ' + xρ + ρ'''/4 + 2νρ' + (3/4)ρ'² = μ² - ν²`.
pub fn verify_rho_third_order(r: &RhoSolution) -> Report {
    let mut report = Report::new(format!("rho third order(mu^2 = {}, nu = {})", r.mu_sq, r.nu));
    let r1 = r.rho.derivative();
    let r3 = r1.derivative().derivative();
    let x = RatFun::x();
    let lhs = -(&(&x * &x) * &r1) + &x * &r.rho + r3.scale(&BigRat::new(1.into(), 4.into()))
        + r1.scale(&(&r.nu * int(2)))
        + r1.pow(2).scale(&BigRat::new(3.into(), 4.into()));
    let rhs = RatFun::constant(&r.mu_sq - &r.nu * &r.nu);
    report.equal("third-order", &lhs, &rhs);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rat;
    use crate::solutions::{y_from_rho, Sign};
    use proptest::prelude::*;

    fn rho13(sign: i64) -> RhoSolution {
        RhoSolution::new(
            RatFun::from_poly(Poly::new(vec![int(0), rat(4 * sign, 3), int(0), rat(8, 27)])),
            rat(1, 9),
            int(-sign),
        )
    }

    #[test]
    fn p4_examples() {
        let y = RatFun::new(Poly::new(vec![int(1), int(0), rat(-2, 3)]), Poly::x()).unwrap();
        assert!(verify_p4(&P4Solution::new(y.clone(), rat(4, 9), int(-1))).unwrap().passed());
        let bad = verify_p4(&P4Solution::new(y, rat(4, 9), int(0))).unwrap();
        assert!(!bad.passed());
        assert!(!bad.checks[0].residual.is_zero());

        let y = RatFun::new(Poly::from_ints(&[-1, 0, -2]), Poly::x()).unwrap();
        assert!(verify_p4(&P4Solution::new(y, int(4), int(-1))).unwrap().passed());

        assert_eq!(
            verify_p4(&P4Solution::new(RatFun::zero(), int(0), int(0))),
            Err(Error::ZeroFunction("y".into()))
        );
    }

    /// The polynomial residual agrees with evaluating the equation on `RatFun`s.
    #[test]
    fn residual_matches_direct_evaluation() {
        let y = RatFun::new(Poly::from_ints(&[1, 2, 0, -1]), Poly::from_ints(&[3, 0, 1])).unwrap();
        let (a, b) = (rat(2, 5), rat(-7, 3));
        let y1 = y.derivative();
        let y2 = y1.derivative();
        let x = RatFun::x();
        let direct = (&y * &y2).scale(&int(2)) - y1.pow(2) - y.pow(4).scale(&int(3))
            - (&x * &y.pow(3)).scale(&int(8))
            - (&(&x * &x + RatFun::constant(b.clone())) * &y.pow(2)).scale(&int(4))
            + RatFun::constant(&a * int(4));
        let d4 = RatFun::from_poly(y.den().pow(4));
        let scaled = &direct * &d4;
        assert_eq!(scaled, RatFun::from_poly(p4_residual(y.num(), y.den(), &a, &b)));
    }

    #[test]
    fn rho_examples() {
        let seed = RhoSolution::seed();
        assert!(verify_rho(&seed, &int(0)).passed());
        assert!(verify_rho_third_order(&seed).passed());
        assert!(verify_rho(&rho13(-1), &int(0)).passed());
        assert!(verify_rho(&rho13(1), &int(0)).passed());
        assert!(verify_rho_third_order(&rho13(1)).passed());
        let perturbed = RhoSolution::new(seed.rho, int(1), int(0));
        assert!(!verify_rho(&perturbed, &int(0)).passed());
        let zero = RhoSolution::new(RatFun::zero(), int(0), int(0));
        assert!(verify_rho_third_order(&zero).passed());
    }

    #[test]
    fn nonzero_integration_constant() {
        // ρ = c0 constant: ρ''² = 4c0² - 8C, so C = c0²/2 works.
        let r = RhoSolution::new(RatFun::constant(int(3)), int(5), int(2));
        assert!(verify_rho(&r, &rat(9, 2)).passed());
        assert!(!verify_rho(&r, &int(0)).passed());
    }

    #[test]
    fn y_from_22_member() {
        let rho = RatFun::new(Poly::from_ints(&[0, 8]), Poly::from_ints(&[1, 0, 2])).unwrap();
        let r = RhoSolution::new(rho, int(9), int(-1));
        let y = y_from_rho(&r, Sign::Minus).unwrap();
        assert_eq!((y.a.clone(), y.b.clone()), (int(9), int(-2)));
        assert!(verify_p4(&y).unwrap().passed());
    }

    proptest! {
        /// Perturbing any parameter of a valid solution breaks the identity.
        #[test]
        fn perturbed_b_fails(db in 1i64..20, dd in 1i64..5) {
            let y = RatFun::new(Poly::new(vec![int(1), int(0), rat(-2, 3)]), Poly::x()).unwrap();
            let s = P4Solution::new(y, rat(4, 9), int(-1) + rat(db, dd));
            prop_assert!(!verify_p4(&s).unwrap().passed());
        }
    }
}
