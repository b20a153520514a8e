use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The imaginary part of the solution is too close to singular for the
    /// balanced polar factorization to be meaningful.
    #[error("imaginary part nearly singular: min eigenvalue {min_eig:.3e} below {floor:.1e}")]
    IllConditioned { min_eig: f64, floor: f64 },

    #[error("Perron iteration stalled after {iterations} steps (last change {change:.3e})")]
    PerronStalled { iterations: usize, change: f64 },

    #[error("perturbed equation not solved: residual {residual:.3e} after {iterations} iterations")]
    PerturbedStalled { residual: f64, iterations: usize },

    #[error("dimension {got} exceeds the dense verification cutoff {cutoff}")]
    TooLarge { got: usize, cutoff: usize },

    #[error("{0}")]
    BadParam(&'static str),

    #[error(transparent)]
    Core(#[from] herm_core::Error),

    #[error(transparent)]
    Solver(#[from] mde_solver::Error),

    #[error(transparent)]
    SelfEnergy(#[from] self_energy::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
