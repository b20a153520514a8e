use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Ensemble description is internally inconsistent (dimension mismatch,
    /// symmetry-class mismatch between kernel and spec, bad bare matrix).
    #[error("bad ensemble spec: {0}")]
    BadSpec(String),

    /// Invalid experiment parameter (empty schedule, zero trials, bad window).
    #[error("bad parameter: {0}")]
    BadParam(String),

    /// The requested covariance is not positive semidefinite, so no Gaussian
    /// field realizes it.
    #[error("covariance is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NonPsdCovariance { min_eig: f64 },

    /// General-covariance sampling factorizes a dense matrix over all entry
    /// degrees of freedom and is only offered for small dimensions.
    #[error("dimension {got} exceeds the general-sampler cutoff {cutoff}")]
    TooLarge { got: usize, cutoff: usize },

    /// An experiment collected fewer observations than its statistical test
    /// needs; results would be meaningless rather than merely loose.
    #[error("insufficient statistics: collected {got}, need at least {need}")]
    InsufficientStatistics { got: usize, need: usize },

    #[error(transparent)]
    Core(#[from] herm_core::Error),

    #[error(transparent)]
    SelfEnergy(#[from] self_energy::Error),

    #[error(transparent)]
    Solver(#[from] mde_solver::Error),

    #[error(transparent)]
    Dos(#[from] dos_analysis::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
