//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the engine.
///
/// Variants split into two families: malformed input (shape or range
/// violations) and mathematically well-formed input that the requested
/// operation does not apply to. The CLI maps the former to usage errors
/// and the latter to "not applicable" failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("ideal generators are all zero")]
    EmptyGenerators,

    #[error("weights must be positive")]
    NonPositiveWeight,

    #[error("at least one weight is required")]
    EmptyWeights,

    #[error("polynomial is not quasi-homogeneous for the given weights")]
    NotQuasiHomogeneous,

    #[error("non-isolated singularity: no leading term is a pure power of variable {variable}")]
    NonIsolated { variable: usize },

    #[error("polynomial is not invariant under the automorphism")]
    NotInvariant,

    #[error("automorphism order must be at least 1")]
    ZeroOrder,

    #[error("invalid dimension: hypersurface dimension must be at least 1 (got n = {n})")]
    DimensionTooSmall { n: i64 },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("ambient weight {weight} does not divide the degree {degree}")]
    NonIntegralCoverDegree { weight: u64, degree: u64 },

    #[error("eigenvalue index {j} must lie strictly between 0 and {d}")]
    EigenvalueIndexOutOfRange { j: u64, d: u64 },

    #[error("middle Hodge bound needs even hypersurface dimension (got n = {n})")]
    OddMiddleDimension { n: usize },

    #[error("symmetric-orbit obstruction is only resolved for odd n (got n = {n})")]
    EvenDimensionUnresolved { n: usize },

    #[error("invalid exponent tuple: {reason}")]
    InvalidExponentTuple { reason: &'static str },

    #[error("cover degree must be at least 2 (got m = {m})")]
    CoverDegreeTooSmall { m: u64 },

    #[error("eigenvalue index j = {j} must satisfy 1 <= j <= m - 1 for m = {m}")]
    CoverIndexOutOfRange { m: u64, j: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the input was well-formed but the operation does not
    /// apply to it mathematically.
    pub fn is_not_applicable(&self) -> bool {
        matches!(
            self,
            Error::NotQuasiHomogeneous
                | Error::NonIsolated { .. }
                | Error::NotInvariant
                | Error::OddMiddleDimension { .. }
                | Error::EvenDimensionUnresolved { .. }
        )
    }
}
