//! Verdicts produced by the identity checkers.

use std::fmt;

use crate::exactlin::rational::{self, Rational};

/// The first basis tuple (lexicographic) on which an identity fails, with the
/// full residual vector in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub order: Option<usize>,
    pub indices: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.order {
            write!(f, "order {s}, ")?;
        }
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        let res: Vec<String> = self.residual.iter().map(rational::format).collect();
        write!(f, "indices ({}), residual [{}]", idx.join(","), res.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn pass(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            passed: true,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Report {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            notes: Vec::new(),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "pass" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " at {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
