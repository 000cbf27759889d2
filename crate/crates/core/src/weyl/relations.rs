use super::action::{act_multiplet, act_params, step_error};
use super::params::VTriple;
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::ratfun::Poly;
use crate::report::Report;
use crate::solutions::SymMultiplet;

/// A concrete realization of the generators on parameters and multiplets.
pub trait Realization {
    fn params(&self, letter: Letter, v: &VTriple) -> VTriple;
    fn multiplet(&self, letter: Letter, m: &SymMultiplet, v: &VTriple) -> Result<(SymMultiplet, VTriple)>;
}

/// The realization implemented by [`act_params`] and [`act_multiplet`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Realization for Standard {
    fn params(&self, letter: Letter, v: &VTriple) -> VTriple {
        act_params(letter, v)
    }

    fn multiplet(&self, letter: Letter, m: &SymMultiplet, v: &VTriple) -> Result<(SymMultiplet, VTriple)> {
        act_multiplet(letter, m, v)
    }
}

/// An identity `lhs = rhs` between words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    fn new(lhs: &str, rhs: &str) -> Self {
        let lhs: Word = lhs.parse().expect("relation words are well formed");
        let rhs: Word = rhs.parse().expect("relation words are well formed");
        let show = |w: &Word| if w.is_empty() { "1".to_string() } else { w.to_string() };
        Relation {
            name: format!("{} = {}", show(&lhs), show(&rhs)),
            lhs,
            rhs,
        }
    }
}

/// Every relation checked by [`check_relations`].
pub fn relation_list() -> Vec<Relation> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 1..=3 {
            if n == m {
                continue;
            }
            if n < m {
                out.push(Relation::new(&format!("g{n} g{m} g{n}"), &format!("g{m} g{n} g{m}")));
                out.push(Relation::new(&format!("g{n} g{m} g{n} g{n} g{m} g{n}"), ""));
            }
            out.push(Relation::new(&format!("g{n} g{n} g{m} g{n} g{n} g{m}"), ""));
            out.push(Relation::new(&format!("g{m} g{n} g{n} g{m} g{n} g{n}"), ""));
        }
    }
    for (a, b) in [("gk gi", "pi pi"), ("gi gj", "pi pi"), ("gj gk", "pi pi")] {
        out.push(Relation::new(a, b));
    }
    for n in 1..=3 {
        out.push(Relation::new(&format!("g{n} g{n}"), &format!("G{n}")));
    }
    for s in 0..3 {
        out.push(Relation::new(&format!("s{s} s{s}"), ""));
    }
    out.push(Relation::new("pi pi pi", ""));
    let pairs = [
        ("Gj^-1", "gk Gj gk"),
        ("Gi^-1", "gj Gi gj"),
        ("Gk^-1", "gi Gk gi"),
        ("pi Gi", "Gk pi"),
        ("pi Gk", "Gj pi"),
        ("pi Gj", "Gi pi"),
        ("gj", "Gi^-1 pi_ik"),
        ("gi", "Gj^-1 pi_jk"),
        ("gk", "Gj^-1 pi_ij"),
        ("s0", "gk pi pi"),
        ("s1", "gj pi pi"),
        ("s2", "gi pi pi"),
        ("gk", "s0 pi"),
        ("gk", "pi s2"),
        ("gi", "s2 pi"),
        ("gi", "pi s1"),
        ("gj", "s1 pi"),
        ("gj", "pi s0"),
        ("s1", "pi_ij"),
        ("s2", "pi_ik"),
    ];
    for (a, b) in pairs {
        out.push(Relation::new(a, b));
    }
    for l in Letter::alphabet() {
        out.push(Relation::new(&format!("{l} {}", l.inverse()), ""));
    }
    out
}

fn params_along<R: Realization>(r: &R, word: &Word, v: &VTriple) -> VTriple {
    word.letters().iter().fold(v.clone(), |acc, &l| r.params(l, &acc))
}

fn multiplet_along<R: Realization>(
    r: &R,
    word: &Word,
    m: &SymMultiplet,
    v: &VTriple,
) -> Result<(SymMultiplet, VTriple)> {
    let mut cur = (m.clone(), v.clone());
    for (index, &letter) in word.letters().iter().enumerate() {
        cur = r.multiplet(letter, &cur.0, &cur.1).map_err(|e| step_error(index, letter, e))?;
    }
    Ok(cur)
}

fn param_residual(a: &VTriple, b: &VTriple) -> Poly {
    let (a, b) = (a.as_array(), b.as_array());
    Poly::new((0..3).map(|n| &a[n] - &b[n]).collect())
}

fn multiplet_residual(a: &(SymMultiplet, VTriple), b: &(SymMultiplet, VTriple)) -> Poly {
    for n in 0..3 {
        let d = &a.0.f[n] - &b.0.f[n];
        if !d.is_zero() {
            return d.num().clone();
        }
    }
    let alpha: Poly = Poly::new((0..3).map(|n| &a.0.alpha[n] - &b.0.alpha[n]).collect());
    if !alpha.is_zero() {
        return alpha;
    }
    param_residual(&a.1, &b.1)
}

/// Checks every relation of [`relation_list`] on the parameter triple and,
/// when a seed multiplet is given, on functions as well.
pub fn check_relations(seed: Option<&SymMultiplet>, v: &VTriple) -> Result<Report> {
    check_relations_with(&Standard, seed, v)
}

pub fn check_relations_with<R: Realization>(
    r: &R,
    seed: Option<&SymMultiplet>,
    v: &VTriple,
) -> Result<Report> {
    let mut report = Report::new(format!("relations at v = {v}"));
    let relations = relation_list();
    for rel in &relations {
        let lhs = params_along(r, &rel.lhs, v);
        let rhs = params_along(r, &rel.rhs, v);
        report.zero(format!("[params] {}", rel.name), param_residual(&lhs, &rhs));
    }
    if let Some(m) = seed {
        for rel in &relations {
            let side = |w: &Word, tag: &str| {
                multiplet_along(r, w, m, v).map_err(|e| match e {
                    Error::DegenerateStep { index, letter, reason } => Error::DegenerateStep {
                        index,
                        letter,
                        reason: format!("{reason} (in {} of {})", tag, rel.name),
                    },
                    other => other,
                })
            };
            let lhs = side(&rel.lhs, "left side")?;
            let rhs = side(&rel.rhs, "right side")?;
            report.zero(format!("[functions] {}", rel.name), multiplet_residual(&lhs, &rhs));
        }
    }
    Ok(report)
}
