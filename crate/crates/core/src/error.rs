use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("saturation cap exceeded: {0}")]
    CapExceeded(String),
    #[error("certificate search exhausted: {0}")]
    SearchExhausted(String),
    #[error("not a cofibration: {0}")]
    NotCofibration(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("square is not a pushout: {0}")]
    NotPushout(String),
    #[error("dimension bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    /// Resource-cap failures map to CLI exit status 2.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::CapExceeded(_) | Error::SearchExhausted(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
