use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One generator of the extended affine Weyl group realization.
///
/// Labels are the literal indices `1, 2, 3`; with `(i, j, k) = (2, 1, 3)` the
/// text forms `gi`, `gj`, `gk` stand for `g2`, `g1`, `g3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `g_n` or its inverse.
    Root { label: u8, inverse: bool },
    /// `G_n = g_n²` or its inverse.
    Shift { label: u8, inverse: bool },
    /// `π` or `π⁻¹`.
    Rotation { inverse: bool },
    /// `π_ab`, stored with `a < b`.
    Swap(u8, u8),
    /// `s_0`, `s_1`, `s_2`.
    Reflection(u8),
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::Root { label, inverse } => Letter::Root { label, inverse: !inverse },
            Letter::Shift { label, inverse } => Letter::Shift { label, inverse: !inverse },
            Letter::Rotation { inverse } => Letter::Rotation { inverse: !inverse },
            other => other,
        }
    }

    /// Every letter of the alphabet.
    pub fn alphabet() -> Vec<Letter> {
        let mut out = Vec::with_capacity(20);
        for inverse in [false, true] {
            for label in 1..=3 {
                out.push(Letter::Root { label, inverse });
            }
            for label in 1..=3 {
                out.push(Letter::Shift { label, inverse });
            }
            out.push(Letter::Rotation { inverse });
        }
        out.extend([Letter::Swap(1, 2), Letter::Swap(1, 3), Letter::Swap(2, 3)]);
        out.extend((0..3).map(Letter::Reflection));
        out
    }
}

fn label_of(c: &str) -> Option<u8> {
    match c {
        "1" | "j" => Some(1),
        "2" | "i" => Some(2),
        "3" | "k" => Some(3),
        _ => None,
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        let (body, inverse) = match s.strip_suffix("^-1").or_else(|| s.strip_suffix("⁻¹")) {
            Some(b) => (b, true),
            None => (s, false),
        };
        let body = body.replace('π', "pi").replace('_', "");
        if let Some(rest) = body.strip_prefix("pi") {
            if rest.is_empty() {
                return Ok(Letter::Rotation { inverse });
            }
            let labels: Vec<u8> = rest
                .chars()
                .map(|c| label_of(&c.to_string()).ok_or_else(bad))
                .collect::<Result<_>>()?;
            return match labels.as_slice() {
                [a, b] if a != b => Ok(Letter::Swap(*a.min(b), *a.max(b))),
                _ => Err(bad()),
            };
        }
        if let Some(rest) = body.strip_prefix('g') {
            let label = label_of(rest).ok_or_else(bad)?;
            return Ok(Letter::Root { label, inverse });
        }
        if let Some(rest) = body.strip_prefix('G') {
            let label = label_of(rest).ok_or_else(bad)?;
            return Ok(Letter::Shift { label, inverse });
        }
        if let Some(rest) = body.strip_prefix('s') {
            if !inverse {
                if let Ok(n @ 0..=2) = rest.parse::<u8>() {
                    return Ok(Letter::Reflection(n));
                }
            }
        }
        Err(bad())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = |i: bool| if i { "^-1" } else { "" };
        match *self {
            Letter::Root { label, inverse } => write!(f, "g{label}{}", inv(inverse)),
            Letter::Shift { label, inverse } => write!(f, "G{label}{}", inv(inverse)),
            Letter::Rotation { inverse } => write!(f, "pi{}", inv(inverse)),
            Letter::Swap(a, b) => write!(f, "pi{a}{b}"),
            Letter::Reflection(n) => write!(f, "s{n}"),
        }
    }
}

/// A word in the generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_text_forms() {
        let w: Word = "gk gk pi s1 Gi^-1".parse().unwrap();
        assert_eq!(
            w.0,
            vec![
                Letter::Root { label: 3, inverse: false },
                Letter::Root { label: 3, inverse: false },
                Letter::Rotation { inverse: false },
                Letter::Reflection(1),
                Letter::Shift { label: 2, inverse: true },
            ]
        );
        assert_eq!(w.to_string(), "g3 g3 pi s1 G2^-1");
        assert_eq!("π⁻¹".parse::<Letter>().unwrap(), Letter::Rotation { inverse: true });
        assert_eq!("pi31".parse::<Letter>().unwrap(), Letter::Swap(1, 3));
        assert_eq!("pi_ik".replace('_', "").parse::<Letter>().unwrap(), Letter::Swap(2, 3));
        assert!("".parse::<Word>().unwrap().is_empty());
        for bad in ["g4", "s3", "pi11", "x", "s1^-1"] {
            assert!(bad.parse::<Letter>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for l in Letter::alphabet() {
            assert_eq!(l.to_string().parse::<Letter>().unwrap(), l);
        }
        assert_eq!(Letter::alphabet().len(), 20);
    }
}
