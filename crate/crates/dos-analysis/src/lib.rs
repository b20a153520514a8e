//! Density-of-states analysis on top of the self-consistent solver.
//!
//! Extends solutions at complex spectral parameters down to the real line,
//! estimates the support and internal gaps of the resulting density,
//! builds the quantile map from energies to eigenvalue indices, and
//! reports empirical Hölder regularity.

mod curve;
mod error;
mod holder;
mod quantile;
mod real_line;
mod support;

pub use curve::{DosCurve, DosPoint};
pub use error::{Error, Result};
pub use holder::{holder_check, HolderFit, HolderReport, HOLDER_BOUND, HOLDER_EXPONENTS};
pub use quantile::quantile_index;
pub use real_line::{dos_eta_ladder, dos_on_real_line, harmonic_dos, MAX_EXTRAPOLATION_ORDER};
pub use support::{estimate_support, support_bound, SupportEstimate, DEFAULT_SUPPORT_DELTA};
