//! Verification reports. Each check carries the exact residual polynomial
//! left after clearing denominators; a check passes iff its residual is zero.

use std::fmt;

use serde::Serialize;

use crate::ratfun::{Poly, RatFun};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: Poly,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Free-form annotations (sign conventions, extensions in use).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records `lhs - rhs` (numerator after normalization) as a check.
    pub fn equal(&mut self, name: impl Into<String>, lhs: &RatFun, rhs: &RatFun) -> &mut Self {
        let diff = lhs - rhs;
        self.checks.push(Check {
            name: name.into(),
            residual: diff.num().clone(),
        });
        self
    }

    /// Records a check whose residual is already a polynomial.
    pub fn zero(&mut self, name: impl Into<String>, residual: Poly) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            residual,
        });
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn merge(&mut self, other: Report) -> &mut Self {
        let prefix = other.subject;
        self.checks.extend(other.checks.into_iter().map(|c| Check {
            name: format!("{prefix}: {}", c.name),
            residual: c.residual,
        }));
        self.notes.extend(other.notes);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "  ok    {}", c.name)?;
            } else {
                writeln!(f, "  FAIL  {}  residual = {}", c.name, c.residual)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
