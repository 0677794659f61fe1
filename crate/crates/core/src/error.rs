use thiserror::Error;

use crate::integrals::MomentIntegrals;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    /// An iterative eigen solver ran out of iterations.
    #[error("{what} did not converge after {iterations} iterations")]
    Convergence { what: &'static str, iterations: usize },

    /// Adaptive quadrature hit its order cap before reaching the requested
    /// tolerance. `best` is the highest-order estimate.
    #[error("quadrature tolerance {tolerance:e} not met at order {order}: achieved delta {delta:e}")]
    ToleranceNotMet {
        best: MomentIntegrals,
        delta: f64,
        tolerance: f64,
        order: usize,
    },

    /// Half-angle data too close to cos(phi/2) = 0 to recover the sign of sin(phi/2).
    #[error("degenerate rotation: {0}")]
    Degenerate(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    /// A perturbative result left its range of validity.
    #[error("perturbative validity: {0}")]
    Validity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
