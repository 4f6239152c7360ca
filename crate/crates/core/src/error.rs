use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PqError {
    #[error("quaternion lies on the null cone and has no inverse")]
    NullQuaternion,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("degenerate structure: {0}")]
    DegenerateStructure(String),
    #[error("endomorphism is not skew-symmetric (residual {0:e})")]
    NotSkew(f64),
    #[error("matrix is not in SO(2,1) (residual {0:e})")]
    NotInGroup(f64),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("decomposition is not a symmetric pair: {0}")]
    NotSymmetricPair(String),
    #[error("direction is null")]
    NullDirection,
    #[error("orbit of the sphere point is degenerate")]
    DegenerateOrbit,
    #[error("completion to a unitary frame failed")]
    CompletionFailure,
    #[error("constraint differentials are rank-deficient")]
    DegenerateLevelSet,
    #[error("orbit direction is null")]
    NullOrbit,
    #[error("Killing field is null at the point")]
    NullKilling,
    #[error("point is not regular")]
    NonRegular,
    #[error("finite-difference step {0:e} is below the noise floor")]
    StepTooSmall(f64),
    #[error("root finder did not converge")]
    NoConvergence,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, PqError>;
