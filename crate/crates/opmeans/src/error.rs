use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max deviation {max_dev:.3e} exceeds {tol:.3e} (relative)")]
    NotHermitian { max_dev: f64, tol: f64 },

    #[error("matrix is not square: {rows} rows vs {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("eigenvalue {eigenvalue:.6e} outside the domain of {function}")]
    Domain { function: String, eigenvalue: f64 },

    #[error("matrix is not positive definite: lambda_min = {lambda_min:.6e}")]
    NotPositiveDefinite { lambda_min: f64 },

    #[error("matrix is numerically singular: lambda_min = {lambda_min:.6e}, lambda_max = {lambda_max:.6e}")]
    NumericallySingular { lambda_min: f64, lambda_max: f64 },

    #[error("matrix is ill-conditioned: cond = {cond:.3e} exceeds {cap:.3e}")]
    IllConditioned { cond: f64, cap: f64 },

    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown statement id: {0}")]
    UnknownStatement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
