use thiserror::Error;

/// Errors surfaced by the numeric kernel and the series evaluators.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the domain an algorithm is valid on.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A series or quadrature did not reach the target accuracy within its budget.
    #[error("{op} did not converge: {msg}")]
    NonConvergence { op: &'static str, msg: String },

    /// Division by a jet whose constant term vanishes (and no pole split was requested).
    #[error("degenerate pole: jet division by zero constant term")]
    DegeneratePole,

    /// A term of a sum or an integrand value came back NaN/inf.
    #[error("non-finite value in {op} at index {index}")]
    NonFinite { op: &'static str, index: usize },

    /// A persisted table file failed validation; callers should regenerate.
    #[error("corrupt cache file {path}: {msg}")]
    CacheCorrupt { path: String, msg: String },
}

impl Error {
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub fn no_conv(op: &'static str, msg: impl Into<String>) -> Self {
        Error::NonConvergence { op, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
