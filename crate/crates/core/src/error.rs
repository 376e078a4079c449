use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// Well-formed input outside the domain of an operation.
    #[error("input error: {0}")]
    Input(String),
    /// Input the engine deliberately does not handle.
    #[error("unsupported input: {0}")]
    Unsupported(String),
    /// A size bound (module dimension, field degree) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal consistency check failed.
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Input(_) | Error::Unsupported(_) | Error::Io(_) => 1,
            Error::Resource(_) => 2,
            Error::Verification(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
