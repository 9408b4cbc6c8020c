use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is out of range or malformed.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Drawing probabilities (or another domain object) violate their invariants.
    #[error("domain invariant violated: {0}")]
    Domain(String),

    /// The requested exact computation exceeds the configured size limit.
    #[error("{what} is limited to {limit}, got {got}; {hint}")]
    Capability {
        what: &'static str,
        limit: usize,
        got: usize,
        hint: &'static str,
    },

    /// Two independent numerical routes disagreed.
    #[error("numerical cross-check failed: {0}")]
    Numerical(String),

    /// The restart sampler gave up after too many rejected attempts.
    #[error("restart sampler exceeded {0} attempts without a duplicate-free draw")]
    RestartExhausted(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
