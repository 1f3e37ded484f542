//! The eight structural variants of one-vertex (pre-)maps.
//!
//! A type is written as a three-letter code. Each position is lowercase when
//! the property is absent and uppercase when it is present:
//!
//! | position | lowercase            | uppercase          |
//! |----------|----------------------|--------------------|
//! | 1        | `s` unsigned         | `S` signed         |
//! | 2        | `d` undirected       | `D` directed       |
//! | 3        | `g` half-edges allowed | `G` graph only   |
//!
//! So `sdg` is the plain oriented pre-map and `SDG` is the signed, directed,
//! half-edge-free map.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeCodeError {
    #[error("type code must have exactly 3 characters, got {0:?}")]
    Length(String),
    #[error(
        "invalid character {found:?} at position {position} of type code (expected {expected})"
    )]
    BadChar {
        position: usize,
        found: char,
        expected: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MapType {
    pub signed: bool,
    pub directed: bool,
    /// Half-edges are forbidden, so the reversal involution is fixed-point free.
    pub graph_only: bool,
}

/// Parameters driving every closed-form count for a given [`MapType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeParams {
    /// Ways a vertex can be matched with its mirror image under a median
    /// reflection, counting "left unmatched" as one way.
    pub s: u32,
    /// Decorations available to one proper edge.
    pub t: u32,
    /// Ways to match the two vertices lying on a diagonal mirror.
    pub m: u32,
}

impl MapType {
    pub const fn new(signed: bool, directed: bool, graph_only: bool) -> Self {
        MapType {
            signed,
            directed,
            graph_only,
        }
    }

    /// All eight types in table column order: pre-map types first, and within
    /// each half unsigned-undirected, signed, directed, signed-directed.
    pub const ALL: [MapType; 8] = [
        MapType::new(false, false, false),
        MapType::new(true, false, false),
        MapType::new(false, true, false),
        MapType::new(true, true, false),
        MapType::new(false, false, true),
        MapType::new(true, false, true),
        MapType::new(false, true, true),
        MapType::new(true, true, true),
    ];

    /// The four pre-map types (half-edges allowed), in column order.
    pub fn premap_types() -> [MapType; 4] {
        [Self::ALL[0], Self::ALL[1], Self::ALL[2], Self::ALL[3]]
    }

    /// The four map types (no half-edges), in column order.
    pub fn map_types() -> [MapType; 4] {
        [Self::ALL[4], Self::ALL[5], Self::ALL[6], Self::ALL[7]]
    }

    /// Position of this type in [`MapType::ALL`].
    pub fn index(self) -> usize {
        (self.graph_only as usize) * 4 + (self.directed as usize) * 2 + self.signed as usize
    }

    pub fn code(self) -> String {
        let mut code = String::with_capacity(3);
        code.push(if self.signed { 'S' } else { 's' });
        code.push(if self.directed { 'D' } else { 'd' });
        code.push(if self.graph_only { 'G' } else { 'g' });
        code
    }

    pub fn params(self) -> TypeParams {
        // Columns in `ALL` order.
        const S: [u32; 8] = [2, 3, 1, 1, 1, 2, 0, 0];
        const T: [u32; 8] = [1, 2, 2, 4, 1, 2, 2, 4];
        const M: [u32; 8] = [2, 3, 3, 5, 1, 2, 2, 4];
        let i = self.index();
        TypeParams {
            s: S[i],
            t: T[i],
            m: M[i],
        }
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for MapType {
    type Err = TypeCodeError;

    fn from_str(code: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = code.chars().collect();
        if chars.len() != 3 {
            return Err(TypeCodeError::Length(code.to_string()));
        }
        let flag = |position: usize, lower: char, upper: char, expected| match chars[position] {
            c if c == lower => Ok(false),
            c if c == upper => Ok(true),
            found => Err(TypeCodeError::BadChar {
                position: position + 1,
                found,
                expected,
            }),
        };
        Ok(MapType {
            signed: flag(0, 's', 'S', "'s' or 'S'")?,
            directed: flag(1, 'd', 'D', "'d' or 'D'")?,
            graph_only: flag(2, 'g', 'G', "'g' or 'G'")?,
        })
    }
}

/// Parses a type code; same as `code.parse::<MapType>()`.
pub fn parse_type_code(code: &str) -> Result<MapType, TypeCodeError> {
    code.parse()
}
