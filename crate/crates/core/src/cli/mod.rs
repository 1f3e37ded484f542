//! Subcommand implementations for the `onevertex` binary.
//!
//! Each command renders its output to a `String` so it can be tested without
//! spawning a process; `main.rs` only parses flags and maps errors to exit
//! codes.

mod bfile;
mod oeis;
mod table;
mod verify;

use std::str::FromStr;

use thiserror::Error;

use crate::arith::Count;
use crate::formulas::{self, FormulaError};
use crate::oracle::OracleError;
use crate::typesys::{MapType, TypeCodeError};

pub use bfile::{parse_bfile, BFile, BFileError};
pub use oeis::{oeis_check, OeisReport, OeisSequence};
pub use table::{render_table, Family, Format, TableSpec, MAX_TABLE_VALENCE};
pub use verify::{
    f_agreement_failures, run_verify, run_verify_with, structure_failures, VerifyReport,
};

/// Environment variable that enables the expensive verification range.
pub const EXPENSIVE_ENV: &str = "ONEVERTEX_EXPENSIVE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    TypeCode(#[from] TypeCodeError),
    #[error(transparent)]
    BFile(#[from] BFileError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for usage and I/O problems, 1 for anything that indicates a wrong
    /// count.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::TypeCode(_)
            | CliError::BFile(_)
            | CliError::Io { .. } => 2,
            CliError::Formula(FormulaError::Domain(_))
            | CliError::Oracle(OracleError::Domain(_)) => 2,
            CliError::Formula(_) | CliError::Oracle(_) => 1,
        }
    }
}

pub fn expensive_from_env() -> bool {
    std::env::var(EXPENSIVE_ENV).is_ok_and(|v| v == "1")
}

pub fn cmd_count(ty: MapType, valence: usize) -> Result<String, CliError> {
    Ok(format!("{}\n", formulas::pi(ty, valence)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// Orbit count, from `d = 1`.
    Pi,
    /// Median-reflection fixed points, from `n = 0`.
    F,
    /// Reflection total, from `d = 1`.
    ReflectionTotal,
    /// Rotation total, from `d = 1`.
    RotationTotal,
    /// Involutions, from `n = 0`.
    Involutions,
    /// Pre-graphs, from `d = 1`.
    Pregraphs,
    /// Graphs, from `d = 1`.
    Graphs,
}

impl SequenceKind {
    pub fn first_index(self) -> usize {
        match self {
            SequenceKind::F | SequenceKind::Involutions => 0,
            _ => 1,
        }
    }

    pub fn needs_type(self) -> bool {
        matches!(
            self,
            SequenceKind::Pi
                | SequenceKind::F
                | SequenceKind::ReflectionTotal
                | SequenceKind::RotationTotal
        )
    }
}

impl FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "pi" => SequenceKind::Pi,
            "f" => SequenceKind::F,
            "F" => SequenceKind::ReflectionTotal,
            "R" => SequenceKind::RotationTotal,
            "i" => SequenceKind::Involutions,
            "p" => SequenceKind::Pregraphs,
            "g" => SequenceKind::Graphs,
            other => {
                return Err(format!(
                    "unknown sequence kind {other:?} (pi, f, F, R, i, p, g)"
                ))
            }
        })
    }
}

/// Values of a sequence from its natural first index through `n_max`.
pub fn sequence_values(
    kind: SequenceKind,
    ty: Option<MapType>,
    n_max: usize,
) -> Result<Vec<Count>, CliError> {
    let ty = match (kind.needs_type(), ty) {
        (true, None) => {
            return Err(CliError::Usage(format!(
                "sequence kind {kind:?} needs --type"
            )))
        }
        (_, ty) => ty.unwrap_or(MapType::ALL[0]),
    };
    if kind == SequenceKind::F {
        return Ok(formulas::f_rec_prefix(ty, n_max));
    }
    (kind.first_index()..=n_max)
        .map(|n| {
            Ok(match kind {
                SequenceKind::Pi => formulas::pi(ty, n)?,
                SequenceKind::ReflectionTotal => formulas::reflection_total(ty, n)?,
                SequenceKind::RotationTotal => formulas::rotation_total(ty, n)?,
                SequenceKind::Involutions => formulas::involution_count(n)?,
                SequenceKind::Pregraphs => formulas::pregraph_count(n),
                SequenceKind::Graphs => formulas::graph_count(n),
                SequenceKind::F => unreachable!(),
            })
        })
        .collect()
}

pub fn cmd_sequence(
    kind: SequenceKind,
    ty: Option<MapType>,
    n_max: usize,
) -> Result<String, CliError> {
    Ok(sequence_values(kind, ty, n_max)?
        .into_iter()
        .map(|v| format!("{v}\n"))
        .collect())
}

pub fn cmd_oeis_check(id: &str, path: &std::path::Path) -> Result<OeisReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    oeis_check(id, &parse_bfile(&text)?)
}
