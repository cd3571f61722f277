use thiserror::Error;

/// Errors surfaced by the library. The CLI maps `Input` to exit code 2 and
/// `Limit` / `Infeasible` to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    Limit(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn pre<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

pub(crate) fn limit<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Limit(msg.into()))
}
