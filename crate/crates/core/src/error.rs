use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants split into three families that callers (notably the CLI) map to
/// distinct exit statuses: malformed input, violated preconditions, and
/// internal invariant failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for a list of length {len}")]
    InvalidIndex { index: usize, len: usize },
    #[error("vector {index} is zero; every vector of X must be nonzero")]
    ZeroVector { index: usize },
    #[error("the list is empty")]
    EmptyList,
    #[error("X spans a subspace of dimension {rank}, not the whole {dim}-dimensional space")]
    NotSpanning { rank: usize, dim: usize },
    #[error("no linear functional is positive on every vector of X (cone is not acute)")]
    NonAcute,
    #[error("point {point} lies on a wall hyperplane; T_X is only evaluated at generic points")]
    NonGenericPoint { point: String },
    #[error("set of subspaces is not admissible: {0}")]
    NotAdmissible(String),
    #[error("subspace is not of maximal dimension in Q")]
    NotMaximal,
    #[error("invalid ideal specification: {0}")]
    InvalidSpec(String),
    #[error("invalid regular face: {0}")]
    InvalidFace(String),
    #[error("degree {degree} outside the graded range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("duplicate interpolation node {0}")]
    DuplicateNodes(String),
    #[error("expected {expected} samples, got {got}")]
    SampleCount { expected: usize, got: usize },
    #[error("interpolation system is singular for every perturbation schedule")]
    SingularInterpolation,
    #[error("local piece disagrees with direct evaluation at holdout point {0}")]
    HoldoutMismatch(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_) | Error::SingularInterpolation | Error::HoldoutMismatch(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
