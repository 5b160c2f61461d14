use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inexact division while computing {context}")]
    InexactDivision { context: String },
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("truncation needs at least {monomials} monomials, limit is {limit}")]
    GuardExceeded { monomials: usize, limit: usize },
    #[error("f_n(-2) = {value} for n = {n}, expected +1 or -1")]
    UnexpectedConstant { n: u64, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
