//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Bloch parameters outside the unit ball or a non-unit direction.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Matrix fails the Hermiticity / unit-trace / positivity checks.
    #[error("invalid density matrix: {0}")]
    InvalidMatrix(String),

    /// Scalar argument outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// Tsallis order must lie in (0,1) ∪ (1,2].
    #[error("invalid Tsallis order alpha = {0}; must lie in (0,1) or (1,2]")]
    InvalidAlpha(f64),

    /// Channel parameter p outside [0,1].
    #[error("invalid channel probability p = {0}; must lie in [0,1]")]
    InvalidProbability(f64),

    /// Kraus operators do not satisfy the completeness relation.
    #[error("Kraus completeness violated: max |sum K'K - I| = {0:.3e}")]
    IncompleteChannel(f64),

    /// The bracketing refinement for the geometric measure did not converge.
    #[error("geometric-measure optimizer failed to converge")]
    OptimizerFailure,

    /// Requested a closed form that does not exist for this measure.
    #[error("no closed form for measure {0}; evaluate the channel output directly")]
    UnsupportedMeasure(String),

    /// Malformed grid specification.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
