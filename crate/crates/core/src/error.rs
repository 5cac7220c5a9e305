use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("cochain is not skew-symmetric in its leading arguments: {0}")]
    NotSkew(String),

    /// Degree or dimension beyond what the dense kernels accept.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    /// An input does not satisfy the hypothesis of the requested operation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A derived identity that must hold under the checked hypotheses failed.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
