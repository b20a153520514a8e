use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spectral parameter must be finite with strictly positive imaginary part")]
    BadSpectralParam,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("bad solver configuration: {0}")]
    BadConfig(&'static str),
    #[error("bad eta grid: {0}")]
    BadGrid(&'static str),
    #[error("no convergence within {iterations} iterations; last residual {residual:.3e}")]
    NonConvergence { residual: f64, iterations: usize },
    #[error(
        "imaginary part lost positivity at damping {alpha:.3e} (residual {residual:.3e}); \
         the data pair admits no stable step from here"
    )]
    DampingUnderflow { alpha: f64, residual: f64 },
    #[error("data pair is not translation-invariant; no circulant form exists")]
    NotCirculant,
    #[error(transparent)]
    Core(#[from] herm_core::Error),
    #[error(transparent)]
    SelfEnergy(#[from] self_energy::Error),
}
