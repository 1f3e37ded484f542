//! Cross-checks against OEIS b-files supplied on disk.

use std::fmt;

use super::{BFile, CliError};
use crate::arith::Count;
use crate::formulas;
use crate::typesys::MapType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSequence {
    /// `f(n)` for `sdg`.
    A000898,
    /// `f(n)` for `sDg`.
    A115329,
    /// `f(n)` for `sdG`.
    A047974,
    /// `f(2n-2)` for `sDG`, `n >= 1`.
    A052714,
    /// `f(2n-2)` for `SDG`, `n >= 1`.
    A052734,
    /// `pi(2n)` for `sdG`, `n >= 1`; the b-file's `n = 0` term has no
    /// counterpart since `pi` is undefined at valence 0.
    A054499,
}

impl OeisSequence {
    pub const ALL: [OeisSequence; 6] = [
        OeisSequence::A000898,
        OeisSequence::A115329,
        OeisSequence::A047974,
        OeisSequence::A052714,
        OeisSequence::A052734,
        OeisSequence::A054499,
    ];

    pub fn id(self) -> &'static str {
        match self {
            OeisSequence::A000898 => "A000898",
            OeisSequence::A115329 => "A115329",
            OeisSequence::A047974 => "A047974",
            OeisSequence::A052714 => "A052714",
            OeisSequence::A052734 => "A052734",
            OeisSequence::A054499 => "A054499",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }

    /// Smallest index with an internal counterpart.
    pub fn first_index(self) -> i64 {
        match self {
            OeisSequence::A000898 | OeisSequence::A115329 | OeisSequence::A047974 => 0,
            _ => 1,
        }
    }

    fn ty(self) -> MapType {
        let code = match self {
            OeisSequence::A000898 => "sdg",
            OeisSequence::A115329 => "sDg",
            OeisSequence::A047974 | OeisSequence::A054499 => "sdG",
            OeisSequence::A052714 => "sDG",
            OeisSequence::A052734 => "SDG",
        };
        code.parse().expect("valid code")
    }

    pub fn describe(self) -> String {
        let ty = self.ty();
        match self {
            OeisSequence::A000898 | OeisSequence::A115329 | OeisSequence::A047974 => {
                format!("f_{ty}(n), n >= 0")
            }
            OeisSequence::A052714 | OeisSequence::A052734 => format!("f_{ty}(2n-2), n >= 1"),
            OeisSequence::A054499 => format!("pi_{ty}(2n), n >= 1"),
        }
    }

    /// Internal value at OEIS index `n`, or `None` outside the mapped range.
    pub fn value(self, n: i64) -> Result<Option<Count>, CliError> {
        if n < self.first_index() {
            return Ok(None);
        }
        let n = n as usize;
        Ok(Some(match self {
            OeisSequence::A000898 | OeisSequence::A115329 | OeisSequence::A047974 => {
                formulas::f_rec(self.ty(), n)
            }
            OeisSequence::A052714 | OeisSequence::A052734 => formulas::f_rec(self.ty(), 2 * n - 2),
            OeisSequence::A054499 => formulas::pi(self.ty(), 2 * n)?,
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisReport {
    pub sequence: OeisSequence,
    pub compared: usize,
    pub matched: usize,
    /// b-file indices below the mapped range, not compared.
    pub skipped: Vec<i64>,
    /// `(index, b-file value, internal value)`.
    pub mismatches: Vec<(i64, Count, Count)>,
}

impl OeisReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.compared > 0
    }
}

impl fmt::Display for OeisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.sequence.id(), self.sequence.describe())?;
        if !self.skipped.is_empty() {
            let skipped: Vec<String> = self.skipped.iter().map(i64::to_string).collect();
            writeln!(
                f,
                "aligned from index {}; not compared: {}",
                self.sequence.first_index(),
                skipped.join(", ")
            )?;
        }
        for (n, theirs, ours) in &self.mismatches {
            writeln!(f, "mismatch at {n}: b-file {theirs}, computed {ours}")?;
        }
        writeln!(f, "{}/{} match", self.matched, self.compared)
    }
}

pub fn oeis_check(id: &str, bfile: &BFile) -> Result<OeisReport, CliError> {
    let sequence = OeisSequence::from_id(id)
        .ok_or_else(|| CliError::Usage(format!("unmapped sequence {id}")))?;
    let mut report = OeisReport {
        sequence,
        compared: 0,
        matched: 0,
        skipped: Vec::new(),
        mismatches: Vec::new(),
    };
    for (n, theirs) in &bfile.entries {
        match sequence.value(*n)? {
            None => report.skipped.push(*n),
            Some(ours) => {
                report.compared += 1;
                if &ours == theirs {
                    report.matched += 1;
                } else {
                    report.mismatches.push((*n, theirs.clone(), ours));
                }
            }
        }
    }
    Ok(report)
}
