//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building root data, lifts, tables or
/// running the verification oracles.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type: positive-root closure exceeded {0} roots")]
    NotFiniteType(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("polynomial is not divisible by 1 - e^{{{0}}}")]
    NotDivisible(String),
    #[error("expected an integer value, got {0}")]
    NonInteger(String),
    #[error("element {0} is not a minimal coset representative for I = {1}")]
    NotMinimalRep(String, String),
    #[error("Kronecker delta check failed for the lift at w = {0}")]
    DeltaCheckFailed(String),
    #[error("Steinberg matrix is singular; cannot solve for the tensor lift")]
    SingularMatrix,
    #[error("tensor-lift solve produced a non-polynomial entry at w = {0}: remainder after dividing by the determinant")]
    NonPolynomialSolution(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("could not find a generic torus point after {0} attempts")]
    GenericityFailure(usize),
    #[error("evaluation matrix is singular (point not generic or set not a basis)")]
    SingularEvaluation,
    #[error("monomial window exhausted at bound {0}; reduction not solvable")]
    WindowExhausted(i64),
    #[error("torus point has a zero coordinate at position {0}")]
    ZeroCoordinate(usize),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("group too large for the tensor lift without the explicit opt-in (|W| = {0})")]
    GroupTooLarge(usize),
    #[error("cache entry is corrupt or stale: {0}")]
    CorruptCache(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
