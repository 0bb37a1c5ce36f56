use alloc::string::String;

use crate::Sign;

/// Errors raised by constructors and operations of this crate.
///
/// Conditions that callers usually want to inspect rather than handle as a
/// failure (for instance why an endomorphism does not induce a metric) are
/// returned as reports instead.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },

    #[error("bilinear form is numerically degenerate")]
    DegenerateForm,

    #[error("form kind mismatch: {0}")]
    FormKind(&'static str),

    #[error("endomorphism is not injective")]
    NotInjective,

    #[error("matrix is not an almost complex structure (J² ≠ −I)")]
    NotComplex,

    #[error("matrix is neither almost complex nor almost product")]
    NotPolynomial,

    #[error("operator and metric do not form an (α, ε)-metric structure")]
    IncompatiblePair,

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error("missing input: {0}")]
    MissingInput(&'static str),

    #[error("projection onto V is singular on every candidate subspace ({attempts} attempts)")]
    ProjectionSingular { attempts: usize },

    #[error("construction needs α = {expected}, data has α = {found}")]
    WrongAlpha { expected: Sign, found: Sign },

    #[error("structures are not pairwise anti-commuting")]
    NotAnticommuting,

    #[error("invalid Kähler data: {0}")]
    InvalidKahlerData(&'static str),

    #[error("invalid (α, ε)-metric data: {0}")]
    InvalidManifoldData(&'static str),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
