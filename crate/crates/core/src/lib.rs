//! Exact counts of one-vertex maps and pre-maps up to dihedral symmetry.
//!
//! [`formulas::pi`] evaluates the closed form for any of the eight
//! [`MapType`]s; [`oracle`] recounts small cases by brute force.

pub mod arith;
pub mod cli;
pub mod formulas;
pub mod oracle;
pub mod series;
pub mod typesys;

pub use arith::{Count, Rational};
pub use formulas::{pi, FormulaError};
pub use series::{SeriesKind, SeriesPrefix};
pub use typesys::{parse_type_code, MapType, TypeCodeError, TypeParams};
