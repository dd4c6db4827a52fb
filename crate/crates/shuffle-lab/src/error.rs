//! Crate-wide error type.

/// Errors surfaced by fallible operations. Pure arithmetic that can only fail
/// through programmer error (e.g. division by the zero fraction) panics
/// instead; see the individual operation docs.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("division by zero in Q(q,t)")]
    DivisionByZero,

    #[error("substitution hits a pole: denominator vanishes")]
    Pole,

    #[error("{divisor} does not divide {dividend}")]
    NonDivisible { dividend: u32, divisor: u32 },

    #[error("degree {needed} exceeds configured bound {bound}")]
    DegreeOverflow { needed: usize, bound: usize },

    #[error("pair ({0}, {1}) is not coprime")]
    NotCoprime(u32, u32),

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("fall-labeling content is not allowable")]
    NotAllowable,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
