//! Error taxonomy shared by every module.
//!
//! Violations of structural axioms and counterexamples found by checkers are
//! *data*, not errors; only unusable inputs and exhausted budgets surface here.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input cannot be interpreted at all (unknown elements, non-total maps,
    /// unparseable rationals, class mismatches).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is not defined for the requested structure class.
    #[error("unsupported class: {0}")]
    UnsupportedClass(String),

    /// An explicit size or iteration budget was exhausted before completion.
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    /// A condition the theory guarantees failed to hold; indicates corrupted
    /// state or a bug, never a property of well-formed inputs.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
