//! Exact geometric substrate: rationals, points, boxes, regions and
//! symbol addresses. All distances use the Chebyshev (max-coordinate) metric.

mod address;
mod cantor;
mod point;
mod rational;
mod region;

pub use address::Address;
pub use cantor::{cylinder, eval_ternary_address, TernaryTail};
pub use point::{distance, Point};
pub use rational::Rational;
pub use region::{AxisBox, Region};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0} (only 1 and 2 are modelled)")]
    UnsupportedDimension(usize),
    #[error("coordinate {0} outside [0, 1]")]
    OutOfUnitRange(Rational),
    #[error("inverted interval [{}, {}]", .0.0, .0.1)]
    InvertedInterval(Box<(Rational, Rational)>),
    #[error("region needs at least one box")]
    EmptyRegion,
    #[error("symbol {symbol} outside alphabet of size {arity}")]
    BadSymbol { symbol: u32, arity: u32 },
    #[error("alphabet must have at least two symbols, got {0}")]
    BadArity(u32),
    #[error("operation needs a binary alphabet, address has arity {0}")]
    NotBinary(u32),
    #[error("parse error: {0}")]
    Parse(String),
}
