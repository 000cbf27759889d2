use serde::Serialize;

use super::params::{VTriple, I, J, K};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::ratfun::{int, rat, BigRat, RatFun};
use crate::solutions::{verify_symmetric, SymMultiplet};

/// Array position of the literal label `n ∈ {1, 2, 3}`.
fn pos(label: u8) -> usize {
    label as usize - 1
}

/// Builds a triple from its `(v_i, v_j, v_k)` components.
fn ijk(vi: BigRat, vj: BigRat, vk: BigRat) -> VTriple {
    let mut v: [BigRat; 3] = Default::default();
    v[I] = vi;
    v[J] = vj;
    v[K] = vk;
    VTriple::from_array_unchecked(v)
}

/// Parameter action of a single letter.
pub fn act_params(letter: Letter, v: &VTriple) -> VTriple {
    let (vi, vj, vk) = (v.vi().clone(), v.vj().clone(), v.vk().clone());
    let third = rat(1, 3);
    let two_thirds = rat(2, 3);
    match letter {
        Letter::Root { label, inverse: false } => match pos(label) {
            K => ijk(vj + &two_thirds, vi - &third, vk - &third),
            I => ijk(vi - &third, vk - &third, vj + &two_thirds),
            _ => ijk(vk - &third, vj - &third, vi + &two_thirds),
        },
        Letter::Shift { label, inverse } => {
            let sign = if inverse { int(-1) } else { int(1) };
            let mut d: [BigRat; 3] = std::array::from_fn(|_| &third * &sign);
            d[pos(label)] = &d[pos(label)] - &sign;
            v.shifted(d)
        }
        Letter::Rotation { inverse: false } => ijk(vk - &third, vi - &third, vj + &two_thirds),
        Letter::Rotation { inverse: true } => ijk(vj + &third, vk - &two_thirds, vi + &third),
        Letter::Swap(a, b) => {
            let mut arr = v.as_array().clone();
            arr.swap(pos(a), pos(b));
            VTriple::from_array_unchecked(arr)
        }
        Letter::Reflection(0) => ijk(vi, vk - int(1), vj + int(1)),
        Letter::Reflection(1) => ijk(vj, vi, vk),
        Letter::Reflection(_) => ijk(vk, vj, vi),
        Letter::Root { inverse: true, .. } => expand(letter)
            .into_iter()
            .fold(v.clone(), |acc, l| act_params(l, &acc)),
    }
}

/// Rewrites composite letters in terms of `g_n`, `π^{±1}` and `s_m`.
fn expand(letter: Letter) -> Vec<Letter> {
    let rot_inv = Letter::Rotation { inverse: true };
    match letter {
        Letter::Root { label, inverse: true } => {
            let s = match pos(label) {
                K => 0,
                I => 2,
                _ => 1,
            };
            vec![rot_inv, Letter::Reflection(s)]
        }
        Letter::Shift { label, inverse } => {
            let g = Letter::Root { label, inverse };
            let mut out = expand(g);
            out.extend(expand(g));
            out
        }
        Letter::Swap(1, 2) => vec![Letter::Reflection(1)],
        Letter::Swap(2, 3) => vec![Letter::Reflection(2)],
        Letter::Swap(..) => vec![Letter::Reflection(1), Letter::Reflection(2), Letter::Reflection(1)],
        other => vec![other],
    }
}

/// `(ln f_m)_x`. On a solution this is `f_{m+1} - f_{m+2} + α_m/f_m`, so a
/// component vanishing with `α_m = 0` continues to `f_{m+1} - f_{m+2}`.
fn log_d(f: &[RatFun; 3], alpha: &[BigRat; 3], m: usize) -> Result<RatFun> {
    if !f[m].is_zero() {
        return f[m].log_derivative();
    }
    if alpha[m] != BigRat::from_integer(0.into()) {
        return Err(Error::ZeroFunction(format!("f{m}")));
    }
    Ok(&f[(m + 1) % 3] - &f[(m + 2) % 3])
}

/// Function-level action of a primitive letter on `(f0, f1, f2)`.
fn act_primitive(letter: Letter, f: &[RatFun; 3], v: &VTriple) -> Result<[RatFun; 3]> {
    let alpha = v.alphas();
    let log_d = |f: &[RatFun; 3], m: usize| log_d(f, &alpha, m);
    let at = |m: usize| f[m % 3].clone();
    Ok(match letter {
        Letter::Reflection(m) => {
            let m = m as usize;
            let l = log_d(f, m)?;
            let mut out = f.clone();
            out[(m + 1) % 3] = &at(m + 2) + &l;
            out[(m + 2) % 3] = &at(m + 1) - &l;
            out
        }
        Letter::Rotation { inverse: false } => [at(1), at(2), at(0)],
        Letter::Rotation { inverse: true } => [at(2), at(0), at(1)],
        Letter::Root { label, inverse: false } => match pos(label) {
            K => {
                let l = log_d(f, 0)?;
                [&at(2) + &l, &at(1) - &l, at(0)]
            }
            I => {
                let l = log_d(f, 2)?;
                [&at(0) - &l, at(2), &at(1) + &l]
            }
            _ => {
                let l = log_d(f, 1)?;
                [at(1), &at(0) + &l, &at(2) - &l]
            }
        },
        composite => {
            let (mut cur, mut v) = (f.clone(), v.clone());
            for l in expand(composite) {
                cur = act_primitive(l, &cur, &v)?;
                v = act_params(l, &v);
            }
            cur
        }
    })
}

/// Applies one letter to a multiplet; the new `α`'s are read off the
/// transformed triple.
pub fn act_multiplet(letter: Letter, m: &SymMultiplet, v: &VTriple) -> Result<(SymMultiplet, VTriple)> {
    let f = act_primitive(letter, &m.f, v)?;
    let v = act_params(letter, v);
    Ok((SymMultiplet::new(f, v.alphas()), v))
}

/// Applies a word left to right; a degenerate step reports its index.
pub fn apply_word(word: &Word, m: &SymMultiplet, v: &VTriple) -> Result<(SymMultiplet, VTriple)> {
    let mut cur = (m.clone(), v.clone());
    for (index, &letter) in word.letters().iter().enumerate() {
        cur = act_multiplet(letter, &cur.0, &cur.1).map_err(|e| step_error(index, letter, e))?;
    }
    Ok(cur)
}

pub fn apply_word_params(word: &Word, v: &VTriple) -> VTriple {
    word.letters().iter().fold(v.clone(), |acc, &l| act_params(l, &acc))
}

pub(crate) fn step_error(index: usize, letter: Letter, e: Error) -> Error {
    Error::DegenerateStep {
        index,
        letter: letter.to_string(),
        reason: e.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStep {
    pub step: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub letter: Option<String>,
    pub multiplet: SymMultiplet,
    pub v: VTriple,
    pub verified: bool,
}

/// The trajectory of `seed` under `word`, verifying the symmetric system at
/// every step. Step 0 is the seed itself.
pub fn orbit(seed: &SymMultiplet, v: &VTriple, word: &Word) -> Result<Vec<OrbitStep>> {
    let mut out = vec![OrbitStep {
        step: 0,
        letter: None,
        multiplet: seed.clone(),
        v: v.clone(),
        verified: verify_symmetric(seed).passed(),
    }];
    let (mut m, mut p) = (seed.clone(), v.clone());
    for (index, &letter) in word.letters().iter().enumerate() {
        (m, p) = act_multiplet(letter, &m, &p).map_err(|e| step_error(index, letter, e))?;
        out.push(OrbitStep {
            step: index + 1,
            letter: Some(letter.to_string()),
            verified: verify_symmetric(&m).passed(),
            multiplet: m.clone(),
            v: p.clone(),
        });
    }
    Ok(out)
}
