use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid decimal literal: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series centers differ")]
    CenterMismatch,

    #[error("constant term is numerically zero")]
    ZeroConstantTerm,

    #[error("function has a pole at the requested center")]
    Pole,

    #[error("dominance violated at index {index}: radicand is not positive real (raw root {raw})")]
    DominanceViolated { index: usize, raw: String },

    #[error("generalized zeta value vanishes; no root can be extracted")]
    NoRoot,

    #[error("w coincides with an attractor singularity or a zero of the radicand")]
    Singularity,

    #[error("no branch satisfied the residual threshold (best residual {best:e})")]
    BranchNotFound { best: f64 },

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("nearest-integer rounding is ambiguous (distance {0})")]
    Ambiguous(f64),

    #[error("malformed table: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
