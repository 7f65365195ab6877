//! Error type shared across the crate.

use std::fmt;

/// Crate-wide error enum. Variants mirror the failure modes of the
/// individual modules; see each operation's documentation for which
/// variants it can produce.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The surface has complexity N = 3g - 3 + n < 1 (no pants curve to
    /// work with) or nonnegative Euler characteristic.
    ComplexityTooLow { genus: u32, boundary: u32 },
    /// A coordinate vector has the wrong number of entries for the surface.
    DimensionMismatch { expected: usize, got: usize },
    /// Strand counts need an even total intersection number per pants.
    ParityViolation { m: (i64, i64, i64) },
    /// Intersection numbers must be nonnegative.
    NegativeCount { m: (i64, i64, i64) },
    /// The coordinate fails the realizability conditions.
    NotRealizable,
    /// Hyperbolic trigonometry needs strictly positive lengths.
    NonPositiveLength(f64),
    /// Holonomy assembly missed a consistency identity beyond tolerance.
    NumericalFailure(String),
    /// A matrix expected to be hyperbolic has |trace| <= 2 + tol.
    NonHyperbolic { trace: f64 },
    /// A linking test in a deciding position was too close to call.
    NumericalAmbiguity,
    /// The input word reduces to the identity.
    TrivialCurve,
    /// The input word is conjugate to a power of a boundary component.
    PeripheralCurve { boundary: usize },
    /// A word token does not name a generator of this marking.
    UnknownGenerator(String),
    /// A word token is malformed.
    BadWordToken(String),
    /// Invalid run configuration (tolerance range, jobs, metric params...).
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ComplexityTooLow { genus, boundary } => write!(
                f,
                "surface (g={genus}, n={boundary}) has complexity N = 3g-3+n < 1"
            ),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "coordinate has {got} entries, surface needs {expected}")
            }
            Error::ParityViolation { m } => {
                write!(f, "intersection numbers {m:?} have odd sum")
            }
            Error::NegativeCount { m } => {
                write!(f, "intersection numbers {m:?} contain a negative entry")
            }
            Error::NotRealizable => write!(f, "coordinate is not realizable as a multicurve"),
            Error::NonPositiveLength(l) => write!(f, "length {l} is not positive"),
            Error::NumericalFailure(what) => write!(f, "numerical failure: {what}"),
            Error::NonHyperbolic { trace } => {
                write!(f, "matrix with |trace| = {trace} is not hyperbolic")
            }
            Error::NumericalAmbiguity => {
                write!(f, "linking test ambiguous at the requested tolerance")
            }
            Error::TrivialCurve => write!(f, "word represents the trivial class"),
            Error::PeripheralCurve { boundary } => {
                write!(f, "word is conjugate to a power of boundary component {boundary}")
            }
            Error::UnknownGenerator(tok) => write!(f, "unknown generator '{tok}'"),
            Error::BadWordToken(tok) => write!(f, "malformed word token '{tok}'"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
