use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit: {what} needs {needed} evaluations, budget is {budget}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("invalid state: {0}")]
    State(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
