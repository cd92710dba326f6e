use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for kind {kind}")]
    InvalidRank { kind: char, rank: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a chain (kind A) resolution graph")]
    NotChain,

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("malformed system: {0}")]
    MalformedSystem(String),

    #[error("invalid blow-up program: {0}")]
    InvalidProgram(String),

    #[error("total transform is not simple normal crossing: {0}; supply a blow-up program")]
    NotSnc(String),

    #[error("degenerate convexity input: the two coefficient vectors coincide")]
    ConvexityIdentity,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inadmissible singularity configuration {0:?}")]
    Inadmissible(String),

    #[error("inconsistent surface flags: {0}")]
    InconsistentFlags(String),

    #[error("internal solver invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
