use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller passed arguments outside the documented domain.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("field context mismatch: GF(2^{left}) vs GF(2^{right})")]
    ContextMismatch { left: u32, right: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A mathematically undefined operation, e.g. inverting a non-unit.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code spec: {}", .0.join("; "))]
    InvalidSpec(Vec<String>),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("internal error: {0}")]
    Internal(String),
}
