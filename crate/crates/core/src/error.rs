use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate hypergeometric parameters: {0}")]
    Degenerate(String),
    #[error("incompatible radicals: {0}")]
    IncompatibleRadicals(String),
    #[error("route unavailable: {0}")]
    RouteUnavailable(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("failed to parse rational {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
