use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operator A is not Hermitian (relative asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("operator A is not positive semidefinite (eigenvalue {eigenvalue:.6e} below cutoff {cutoff:.6e})")]
    NotPositiveSemidefinite { eigenvalue: f64, cutoff: f64 },

    #[error("operator does not admit an A-adjoint (range residual {residual:.3e} exceeds {threshold:.3e})")]
    NotAdjointable { residual: f64, threshold: f64 },

    #[error("operators are bound to different A contexts")]
    ContextMismatch,

    #[error("A has rank 0; the A-unit sphere is empty")]
    DegenerateContext,

    #[error("invalid tolerance policy: {0}")]
    Tolerance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),

    #[error("no non-adjointable operator found within {0} attempts")]
    RetryBudgetExhausted(usize),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
