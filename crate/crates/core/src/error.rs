use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("relations are not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("invalid idempotent set: {0}")]
    InvalidIdempotent(String),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("algebra was not built from a Kupisch series")]
    NotNakayama,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("algebra is not Iwanaga-Gorenstein within the resolution bound")]
    NotGorenstein,
    #[error("algebra has no projective-injective module")]
    NoFaithfulProjInj,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
