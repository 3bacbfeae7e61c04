use thiserror::Error;

/// Errors raised by the exact computations in this crate.
///
/// Variants split into two families: malformed input (`Parse`) and
/// mathematical failures (everything else). The command-line front end maps
/// the former to exit status 2 and the latter to exit status 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("valuation violation: numerator has a nonzero coefficient at x^{index} below the divisor valuation {divisor_valuation}")]
    Valuation {
        index: usize,
        divisor_valuation: usize,
    },

    #[error("division by the zero series")]
    ZeroDivisor,

    #[error("coefficient x^{index} is beyond the valid order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("insufficient series order: need at least {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },

    #[error("nonzero central part where none is allowed")]
    CentralNotAllowed,

    #[error("element is not homogeneous; weights present: {0:?}")]
    NotHomogeneous(Vec<i64>),

    #[error("the zero polynomial has no symmetry data")]
    ZeroPolynomial,

    #[error("c is a free parameter for constant p and must be chosen explicitly")]
    FreeCenterUnset,

    #[error("weight {weight} component is not a multiple of p(D)")]
    NotInSubalgebra { weight: i64 },

    #[error("element is not anti-fixed by the chosen anti-involution (weight {weight})")]
    NotAntiFixed { weight: i64 },

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("nonzero entry touches the window boundary at ({0}, {1}); membership is inconclusive")]
    Inconclusive(i64, i64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("no annihilator of degree at most {dmax} in the requested parity class")]
    NoAnnihilator { dmax: usize },
}

impl Error {
    /// True when the error describes malformed input rather than a
    /// mathematical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
