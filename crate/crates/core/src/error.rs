use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("size mismatch: {0}")]
    Mismatch(String),
    #[error("mixed scalar tags: {0} vs {1}")]
    MixedScalar(&'static str, &'static str),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("not a generalized Hadamard matrix: {0}")]
    NotHadamard(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing geometry hints: {0}")]
    MissingHints(String),
    #[error("did not converge: {0}")]
    NonConvergence(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeGuard(_) => 3,
            Error::Usage(_) => 64,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
