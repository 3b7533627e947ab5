use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid matrix shape: {0}")]
    InvalidShape(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian: ||M - M*||_F = {asymmetry:e} exceeds {tolerance:e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is not positive definite: lambda_min = {lambda_min:e}, lambda_max = {lambda_max:e}")]
    NotPositiveDefinite { lambda_min: f64, lambda_max: f64 },

    #[error("operator family is not a frame: lambda_min(S) = {lambda_min:e}, lambda_max(S) = {lambda_max:e}")]
    NotAFrame { lambda_min: f64, lambda_max: f64 },

    #[error("operator family is not Parseval: ||S - I||_F = {deviation:e} exceeds {tolerance:e}")]
    NotParseval { deviation: f64, tolerance: f64 },

    #[error("not an alternate dual: ||sum L_i* G_i - I||_F = {residual:e} exceeds {tolerance:e}")]
    NotADual { residual: f64, tolerance: f64 },

    #[error("frame shapes do not match: {0}")]
    ShapeMismatch(String),

    #[error("epsilon must lie in [0,1), got {0}")]
    EpsilonOutOfRange(f64),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("no frame found after {0} attempts")]
    RetryCapExceeded(usize),

    #[error("frame file: {0}")]
    Format(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
