//! Solver for the self-consistent matrix equation
//! `-M(z)^{-1} = z·1 - A + S[M(z)]` on the open upper half-plane.
//!
//! The unique solution with positive-definite imaginary part is found by a
//! damped fixed-point iteration that rejects positivity-losing steps,
//! finished by Newton corrections, with a Fourier-mode fast path when the
//! data is translation-invariant. Continuation sweeps descend in the
//! imaginary part with warm starts; the linear stability operator
//! `R - M·S[R]·M` is exposed for conditioning analysis and downstream
//! spectral work.

mod circulant;
mod error;
mod residual;
mod solve;
mod stability;
mod sweep;
mod types;

pub use circulant::solve_circulant;
pub use error::{Error, Result};
pub use residual::{residual, residual_matrix};
pub use solve::{solve_at, solve_dense};
pub use stability::StabilityOp;
pub use sweep::{continuation_sweep, continuation_trace, default_eta_grid, SweepPoint};
pub use types::{DataPair, MdeSolution, Method, SolverConfig, SpectralParam};
