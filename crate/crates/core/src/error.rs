use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// `beta = 1` separates the two degeneracy regimes and is not covered.
    #[error("unsupported degeneracy: β ∈ (0,2), β ≠ 1 (got β = {0})")]
    UnsupportedDegeneracy(f64),
    /// A discretization is too coarse for what was asked of it.
    #[error("resolution error: {0}")]
    Resolution(String),
    /// A numerical procedure failed to produce a finite or converged value.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// An operation was called outside its contract (wrong regime, bad index, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A linear system turned out singular.
    #[error("singular linear system (pivot {0})")]
    Singular(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<S: Into<String>>(msg: S) -> Error {
    Error::Domain(msg.into())
}
