use core::fmt;

use crate::quat::Quaternion;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures reported by the algebra and interpolation routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Inverse of a zero quaternion was requested.
    DivisionByZero,
    /// Some similarity class holds three or more of the nodes, so left
    /// interpolation from `H[z]` is not uniquely possible.
    NotUnisolvent,
    /// Gauss elimination met a pivot below the singularity threshold.
    SingularSystem { step: usize, pivot_norm: f64 },
    /// A Lagrange polynomial could not be normalized at its node.
    DegenerateConfiguration { index: usize, witness: Quaternion },
    /// Two nodes coincide within tolerance.
    InvalidPointSet { first: usize, second: usize },
    PreconditionViolation(&'static str),
    DimensionMismatch { expected: usize, found: usize },
    /// Permutation enumeration would exceed the supported degree.
    DegreeBoundExceeded { requested: usize, max: usize },
    /// A polynomial classified as regular but not harmonic.
    InconsistentClassification,
}

impl Error {
    /// Stable machine-readable identifier for the failure.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::NotUnisolvent => "not-unisolvent",
            Error::SingularSystem { .. } => "singular-system",
            Error::DegenerateConfiguration { .. } => "degenerate-configuration",
            Error::InvalidPointSet { .. } => "invalid-point-set",
            Error::PreconditionViolation(_) => "precondition-violation",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::DegreeBoundExceeded { .. } => "degree-bound-exceeded",
            Error::InconsistentClassification => "inconsistent-classification",
        }
    }

    /// True for failures caused by the mathematics of valid input rather
    /// than by malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero
                | Error::NotUnisolvent
                | Error::SingularSystem { .. }
                | Error::DegenerateConfiguration { .. }
                | Error::InconsistentClassification
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by a zero quaternion"),
            Error::NotUnisolvent => {
                f.write_str("three or more nodes share a similarity class")
            }
            Error::SingularSystem { step, pivot_norm } => write!(
                f,
                "singular system: pivot norm {pivot_norm:e} at elimination step {step}"
            ),
            Error::DegenerateConfiguration { index, witness } => write!(
                f,
                "annihilator vanishes at node {index} (value {witness})"
            ),
            Error::InvalidPointSet { first, second } => {
                write!(f, "nodes {first} and {second} coincide")
            }
            Error::PreconditionViolation(what) => write!(f, "precondition violated: {what}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Error::DegreeBoundExceeded { requested, max } => {
                write!(f, "degree {requested} exceeds the supported bound {max}")
            }
            Error::InconsistentClassification => {
                f.write_str("polynomial classified regular but not harmonic")
            }
        }
    }
}

impl core::error::Error for Error {}
