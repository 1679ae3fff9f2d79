use thiserror::Error;

use crate::algebra::Signature;
use crate::dynamics::Trajectory;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("grade {grade} out of range for n = {n}")]
    GradeOutOfRange { grade: usize, n: usize },

    #[error("grade mismatch: expected grade {expected}, found {found}")]
    GradeMismatch { expected: usize, found: String },

    #[error("operand is not homogeneous (grades {grades:?})")]
    NotHomogeneous { grades: Vec<usize> },

    #[error("blade has zero norm and cannot be inverted")]
    NullBlade,

    #[error("operation requires a Euclidean signature, got {0}")]
    NonEuclideanSignature(Signature),

    #[error("unsupported signature {0}")]
    UnsupportedSignature(Signature),

    #[error("dimension {n} exceeds the limit of {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("unexpected form: {0}")]
    UnexpectedForm(String),

    #[error("phase pair has no commutation class attached")]
    UnclassifiedPair,

    #[error("functions refer to different phase pairs")]
    PairMismatch,

    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize, partial: Box<Trajectory> },

    #[error("implicit step did not converge at step {step}")]
    NoConvergence { step: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
