use thiserror::Error;

use crate::region::Violation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate or parameter: {0}")]
    NonFinite(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires planar input (d = 2), found d = {0}")]
    NotPlanar(usize),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("invalid radius {0}: must be finite and non-negative")]
    InvalidRadius(f64),
    #[error("invalid tolerance {0}: must lie in (0, 1)")]
    InvalidTolerance(f64),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("input too large: {what} is {size}, limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("bisection did not converge: bracket [{lo}, {hi}]")]
    NoConvergence { lo: f64, hi: f64 },
    #[error("invalid region: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidRegion(Vec<Violation>),
    #[error("measure {measure} does not apply to {kind}")]
    MeasureMismatch { measure: &'static str, kind: &'static str },
    #[error("invalid bound parameter {name} = {value}: must be >= 1")]
    InvalidBoundParameter { name: &'static str, value: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
