use std::collections::BTreeMap;

use painleve::hamilton::HamiltonianFrame;
use painleve::ratfun::{rat_latex, ratfun_latex, serde_rat};
use painleve::solutions::{HierarchyMember, P4Solution, RhoSolution, Sign, SymMultiplet};
use painleve::{BigRat, Poly, RatFun, Report};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(with = "serde_rat")]
    pub mu_sq: BigRat,
    #[serde(with = "serde_rat")]
    pub nu: BigRat,
    #[serde(with = "serde_rat")]
    pub a: BigRat,
    #[serde(with = "serde_rat")]
    pub b: BigRat,
}

/// One generated hierarchy member as written by `generate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub label: String,
    pub rho: RatFun,
    pub y: RatFun,
    pub sign: Sign,
    pub parameters: Parameters,
    pub residuals: BTreeMap<String, Poly>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SolutionRecord {
    pub fn new(m: &HierarchyMember, reports: &[Report]) -> Self {
        let residuals: BTreeMap<String, Poly> = reports
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| (format!("{}: {}", r.subject, c.name), c.residual.clone())))
            .collect();
        SolutionRecord {
            label: m.label.clone(),
            rho: m.rho.rho.clone(),
            y: m.y.y.clone(),
            sign: m.sign,
            parameters: Parameters {
                mu_sq: m.rho.mu_sq.clone(),
                nu: m.rho.nu.clone(),
                a: m.y.a.clone(),
                b: m.y.b.clone(),
            },
            passed: residuals.values().all(Poly::is_zero),
            residuals,
            notes: m.notes.clone(),
        }
    }

    pub fn rho_solution(&self) -> RhoSolution {
        RhoSolution::new(self.rho.clone(), self.parameters.mu_sq.clone(), self.parameters.nu.clone())
    }

    pub fn p4_solution(&self) -> P4Solution {
        P4Solution::new(self.y.clone(), self.parameters.a.clone(), self.parameters.b.clone())
    }
}

pub fn p4_latex(s: &P4Solution) -> String {
    format!(
        "y(x) = {}, \\quad a = {}, \\quad b = {}",
        ratfun_latex(&s.y),
        rat_latex(&s.a),
        rat_latex(&s.b)
    )
}

pub fn rho_latex(r: &RhoSolution) -> String {
    format!(
        "\\rho(x) = {}, \\quad \\mu^2 = {}, \\quad \\nu = {}",
        ratfun_latex(&r.rho),
        rat_latex(&r.mu_sq),
        rat_latex(&r.nu)
    )
}

pub fn multiplet_latex(m: &SymMultiplet) -> String {
    let fs: Vec<String> = (0..3).map(|j| format!("f_{j} = {}", ratfun_latex(&m.f[j]))).collect();
    let alphas: Vec<String> = (0..3).map(|j| format!("\\alpha_{j} = {}", rat_latex(&m.alpha[j]))).collect();
    format!("{}, \\quad {}", fs.join(", \\quad "), alphas.join(", \\quad "))
}

pub fn frame_latex(f: &HamiltonianFrame) -> String {
    let v = f.v.as_array();
    format!(
        "H = {}, \\quad Q = {}, \\quad P = {}, \\quad \\epsilon = {}1, \\quad (v_1, v_2, v_3) = ({}, {}, {})",
        ratfun_latex(&f.h),
        ratfun_latex(&f.q),
        ratfun_latex(&f.p),
        f.epsilon,
        rat_latex(&v[0]),
        rat_latex(&v[1]),
        rat_latex(&v[2])
    )
}
