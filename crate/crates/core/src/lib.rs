//! Exact, finite-stage constructions relating Cantor sets and Peano
//! continua, decomposition spaces, and primitive-chaos witnesses.
//!
//! Everything is computed over exact rationals. Infinite objects (Cantor
//! sets, limit points, infinite symbol sequences) are handled through
//! depth-parameterized enclosures whose nesting is checked explicitly.

pub mod chaos;
pub mod cli;
pub mod embed;
pub mod fintop;
pub mod geometry;
pub mod report;
pub mod surject;

pub use geometry::{Address, AxisBox, Point, Rational, Region};
pub use report::CheckReport;
