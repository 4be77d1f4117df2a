use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NonPositive(String),
    #[error("value does not fit the target type: {0}")]
    Overflow(String),
    #[error("{0} is not an integral basis")]
    NotIntegralBasis(&'static str),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
