use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not divisible by √2")]
    Divisibility(String),
    #[error("not unitary: {0}")]
    Unitarity(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("lookup table has no entry for residual unitary {0}")]
    TableMiss(String),
    #[error("optimality certificate failed: {0}")]
    Certificate(String),
    #[error("table file: {0}")]
    TableFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
