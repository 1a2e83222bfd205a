use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Model parameters outside their domain (n = 0, p outside `[0,1]`, NaN, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// p = 0 or p = 1 where a formula divides by 1−(1−p)^n or collapses the
    /// geometric intensities. Callers are expected to short-circuit these
    /// cases with the closed forms (P = 0 resp. P = 1).
    #[error("degenerate edge probability p = {0}; handle p in {{0, 1}} analytically")]
    DegenerateP(f64),

    /// An argument outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Problem size exceeds a documented enumeration or DP budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
