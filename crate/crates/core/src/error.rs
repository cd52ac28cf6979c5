//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Degree-indexed quantities (q-word counts) start at 2.
    #[error("degree must be at least 2, got {got}")]
    DegreeTooSmall { got: u64 },

    /// The reciprocal-sinc series has only even coefficients.
    #[error("series coefficient index must be even, got {got}")]
    OddSeriesIndex { got: u64 },

    /// Geodesic logarithm requested outside its injectivity domain.
    #[error("geodesic log undefined: {reason}")]
    LogUndefined { reason: String },
}
