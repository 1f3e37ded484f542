//! OEIS b-file reading and writing.
//!
//! One `index value` pair per line; blank lines and lines starting with `#`
//! are ignored. Indices must strictly increase.

use std::fmt;

use thiserror::Error;

use crate::arith::Count;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected \"index value\", got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: index {index} does not follow {previous}")]
    NonIncreasing {
        line: usize,
        previous: i64,
        index: i64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, Count)>,
}

impl BFile {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn parse_bfile(text: &str) -> Result<BFile, BFileError> {
    let mut entries: Vec<(i64, Count)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || BFileError::Malformed {
            line: i + 1,
            content: raw.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let (Some(index), Some(value), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: Count = value.parse().map_err(|_| malformed())?;
        if let Some(&(previous, _)) = entries.last() {
            if index <= previous {
                return Err(BFileError::NonIncreasing {
                    line: i + 1,
                    previous,
                    index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, value) in &self.entries {
            writeln!(f, "{index} {value}")?;
        }
        Ok(())
    }
}
