use thiserror::Error;

/// Errors surfaced by solver and assembly routines.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("missing dependency for order {order}: {what}")]
    MissingDependency { order: usize, what: String },

    #[error("iteration failed to converge: {context} (residual history: {history:?})")]
    NoConvergence { context: String, history: Vec<f64> },

    #[error("degeneracy detected at x={x:.6}, y={y:.6}: {what}")]
    Degenerate { x: f64, y: f64, what: String },

    #[error("linear solve failed: {0}")]
    LinearSolve(String),

    #[error("non-finite value in field '{field}' at x={x:.6}, y={y:.6}")]
    NonFinite { field: String, x: f64, y: f64 },

    #[error("cannot truncate: source grid top {have:.4} is below required {need:.4}")]
    TruncationRange { have: f64, need: f64 },

    #[error("symmetry violation: {0}")]
    Symmetry(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
