use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is singular or numerically not invertible")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("decay profile entries must be strictly positive")]
    InvalidProfile,
    #[error("dense superoperator refused at dim {dim}; brute-force cutoff is {cutoff}")]
    DenseCutoff { dim: usize, cutoff: usize },
    #[error("{what} did not converge after {iters} iterations (last error {last:.3e})")]
    NoConvergence {
        what: &'static str,
        iters: usize,
        last: f64,
    },
    #[error("LAPACK backend failure: {0}")]
    Backend(String),
}
