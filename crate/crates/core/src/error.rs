use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates a hypothesis of the inequality or constant being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("field has zero norm")]
    ZeroField,

    #[error("radial profile has no derivative values")]
    MissingDerivative,

    #[error("non-finite sample at {0}")]
    NonFinite(String),

    #[error("integrability failure: {0}")]
    Integrability(String),

    #[error("malformed field container: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by invalid parameters rather than by the data.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Integrability(_))
    }
}
