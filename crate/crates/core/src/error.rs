//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree {degree} outside computed window [{lo}, {hi}]")]
    WindowTooSmall { degree: usize, lo: usize, hi: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A run of seeded draws never produced a verified-generic instance.
    #[error("redraw budget exhausted: {0}")]
    RedrawBudget(String),

    /// Two independent seeded draws disagreed on a quantity that must be
    /// generic-stable; the result cannot be trusted.
    #[error("genericity disagreement: {0}")]
    GenericityDisagreement(String),

    /// A stated hypothesis of an operation does not hold on the input.
    #[error("hypothesis failed: {0}")]
    HypothesisFail(String),

    /// A theorem conclusion failed on hypothesis-passing input. Either the
    /// input is a genuine counterexample or there is a bug; both demand a
    /// loud report.
    #[error("theorem violation: {what}\n{context}")]
    TheoremViolation { what: String, context: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn violation(what: impl Into<String>, context: impl Into<String>) -> Self {
        Error::TheoremViolation {
            what: what.into(),
            context: context.into(),
        }
    }
}
