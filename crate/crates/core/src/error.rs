//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the numerical kernels.
///
/// Magnitudes carried in payloads are converted to `f64` so the error type
/// stays independent of the working scalar.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `q = 1` requested where the deformed formulas degenerate; the message
    /// names the closed form to use instead.
    #[error("degenerate deformation q = 1: {0}")]
    DegenerateQ(String),

    /// Invalid configuration value (tolerances, node budgets, grids).
    #[error("config error: {0}")]
    Config(String),

    /// A quadrature failed to converge within the node budget. Carries the
    /// last two estimates so the caller can judge how far apart they are.
    #[error("accuracy error: no convergence within {max_nodes} nodes (last estimate {last:e}, previous {previous:e})")]
    Accuracy {
        max_nodes: usize,
        last: f64,
        previous: f64,
    },

    /// The imaginary part of a contour integral did not cancel below the
    /// configured tolerance.
    #[error("accuracy error: imaginary residue {residue:e} exceeds tolerance {tol:e}")]
    ImaginaryResidue { residue: f64, tol: f64 },

    /// Requested value outside the range the implementation can certify.
    #[error("range error: {0}")]
    Range(String),

    /// Operator/vector dimensions do not line up.
    #[error("dimension mismatch: operator dimension {op_dim}, vector dimension {vec_dim}")]
    DimensionMismatch { op_dim: usize, vec_dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
