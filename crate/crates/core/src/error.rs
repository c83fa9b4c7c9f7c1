use thiserror::Error;

use crate::element::{Element, Pair};

/// Domain errors raised when an operation's precondition does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{element} is outside the corner C[{n}]")]
    OutsideCorner { n: i64, element: Element },

    #[error("zero has no image under the difference homomorphism")]
    ZeroHasNoDifference,

    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    #[error("invalid sequence pair: {0}")]
    InvalidSequence(String),

    #[error("topology {found} is not supported here (expected {expected})")]
    UnsupportedTopology {
        expected: &'static str,
        found: &'static str,
    },

    #[error("neighbourhoods belong to different topologies")]
    TopologyMismatch,

    #[error("the second neighbourhood is not contained in the first: {0} lies in the second only")]
    NotNested(Pair),

    #[error("invalid neighbourhood descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("corner tail is infinite: {start} + t*({}, {}) lies in U and outside C[{n}] for every t >= 0", .step.0, .step.1)]
    InfiniteTail {
        n: i64,
        start: Pair,
        step: (i64, i64),
    },

    #[error("inversion does not map the neighbourhood onto the swapped descriptor: exactly one of {point} ∈ U and its inverse ∈ U' holds")]
    NotInversionSymmetric { point: Pair },

    #[error("window {window} is too small: {reason}")]
    WindowTooSmall { window: i64, reason: String },

    #[error("sequence pairs are identical")]
    IdenticalSequences,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
