use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("invalid kernel: {0}")]
    BadKernel(&'static str),
    #[error("invalid filter taps: {0}")]
    BadTaps(&'static str),
    #[error(transparent)]
    Core(#[from] herm_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
