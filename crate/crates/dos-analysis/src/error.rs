use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad tau grid: {0}")]
    BadGrid(&'static str),
    #[error("bad parameter: {0}")]
    BadParam(&'static str),
    #[error(transparent)]
    Solver(#[from] mde_solver::Error),
}
