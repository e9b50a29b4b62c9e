//! Exact integer linear algebra: dense big-integer matrices, Smith normal form
//! with recorded transforms, the determinantal-divisor oracle and a seeded
//! unimodular generator.

mod io;
mod matrix;
mod minors;
mod rng;
mod snf;
mod unimodular;

use thiserror::Error;

pub use io::parse_matrix;
pub use matrix::IntMatrix;
pub use minors::{minor_gcd_profile, ORACLE_MAX_DIM, ORACLE_MAX_MINORS};
pub use rng::SplitMix64;
pub use snf::{elementary_divisors, smith_normal_form, SnfResult};
pub use unimodular::{apply_slide, random_unimodular, transpose, Axis};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("slide source and destination are both {0}")]
    SameIndex(usize),
    #[error("slide coefficient must be +1 or -1, got {0}")]
    BadSlideCoefficient(i8),
    #[error("{0}x{1} matrix exceeds the minor-enumeration limit")]
    OracleTooLarge(usize, usize),
}
