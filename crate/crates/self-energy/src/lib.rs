//! Self-energy operators for correlated Hermitian ensembles: construction
//! from ensemble descriptions (independent entries, variance profiles,
//! finite-range covariance kernels), application, and estimation of the
//! model parameters — flatness bounds, induced norms, and decay — that the
//! stability theory consumes.

mod decay;
mod error;
mod flatness;
mod kernel;
mod norms;
mod variants;

pub use decay::{decay_check, DecayReport, DECAY_RANDOM_PROBES};
pub use error::{Error, Result};
pub use flatness::{flatness_bounds, FlatnessBounds, FLATNESS_RANDOM_PROBES};
pub use kernel::{CovarianceKernel, FilterTaps, KernelOrigin};
pub use norms::{op_norm_induced, op_norm_positive_route, self_energy_norms, SelfEnergyNorms};
pub use variants::{Beta, SelfEnergy};
