//! Exact computations around q,t-Catalan polynomials.
//!
//! The crate has three layers:
//!
//! - an exact algebra kernel: sparse bivariate polynomials over the
//!   integers ([`QtPoly`]) and their fraction field ([`QtFrac`]);
//! - combinatorics: m-Dyck words with area/dinv statistics ([`dyck`]),
//!   rational-slope Dyck paths with the h+/h- statistics ([`ratslope`]),
//!   integer partitions with arm/leg data and the Garsia-Haiman sum
//!   ([`garsia_haiman`]);
//! - the chain machinery: a generic framework that splits a weighted set
//!   into statistic-shifting chains and certifies joint symmetry from the
//!   chain endpoints ([`chains`]), plus the concrete chain maps for m-Dyck
//!   words ([`mchains`]) and for rational slopes ([`ratslope`]).
//!
//! Everything is exact integer arithmetic; there is no floating point
//! anywhere in the crate.

pub mod chains;
pub mod dyck;
pub mod garsia_haiman;
pub mod mchains;
pub mod poly;
pub mod ratfun;
pub mod ratslope;
pub mod verify;

pub use chains::{ChainDecomposition, ChainSystem, CycleDrawing, DotColor, DrawnDot};
pub use dyck::MDyckWord;
pub use garsia_haiman::Partition;
pub use poly::{Mono, QtPoly};
pub use ratfun::QtFrac;

use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero fraction")]
    DivisionByZero,
    #[error("denominator does not divide numerator (nonzero remainder)")]
    NotPolynomial,
    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),
    #[error("no statistic-transposing bijection T -> I exists: {0}")]
    NoSuchBijection(String),
    #[error("midline violation: initial object {0} has a < d")]
    MidlineViolation(String),
    #[error("word is outside the domain of the map")]
    NotInDomain,
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("word does not belong to part {0}")]
    WrongPart(String),
    #[error("word shape does not match the requested case")]
    CaseMismatch,
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
