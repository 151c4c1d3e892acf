//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any stage of the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented range or otherwise invalid.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Numerical integration failed (non-finite input or unstable step).
    #[error("integration error: {0}")]
    Integration(String),

    /// A signal does not satisfy the preconditions of a transform.
    #[error("signal error: {0}")]
    Signal(String),

    /// Matrix or vector dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Malformed dataset, feature, model, or report file.
    #[error("data error: {0}")]
    Data(String),

    /// Training diverged or an optimizer failed to converge.
    #[error("training error: {0}")]
    Training(String),

    /// A label was read in a phase where the protocol forbids it.
    #[error("label access violation: {0}")]
    LabelAccess(String),

    /// Bad run configuration (unknown key, missing value, bad type).
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-parsable class name, used by the CLI's one-line failures.
    pub fn class(&self) -> &'static str {
        match self {
            Error::InvalidParam(_) => "invalid-param",
            Error::Integration(_) => "integration",
            Error::Signal(_) => "signal",
            Error::Dimension(_) => "dimension",
            Error::Data(_) => "data",
            Error::Training(_) => "training",
            Error::LabelAccess(_) => "label-access",
            Error::Config(_) => "config",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
