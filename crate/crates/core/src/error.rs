use thiserror::Error;

/// Errors raised by the approximations, their inverses, the reference
/// oracle and the certification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{op}: argument {value} outside domain ({expected})")]
    Domain {
        op: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The reference oracle did not converge within its term budget.
    #[error("{method} did not converge at x = {x} within {terms} terms")]
    NoConvergence {
        method: &'static str,
        x: f64,
        terms: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// The requested target/variant combination is not defined.
    #[error("variant {variant} is not defined for target {target}")]
    Unsupported {
        target: &'static str,
        variant: &'static str,
    },

    /// A root search was given a bracket without a sign change.
    #[error("no sign change of {what} on [{lo}, {hi}]")]
    Bracketing { what: &'static str, lo: f64, hi: f64 },

    /// An algebraic invariant was violated; indicates a bug or an unusable
    /// coefficient set.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_finite(op: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            op,
            value: x,
            expected: "finite",
        })
    }
}
