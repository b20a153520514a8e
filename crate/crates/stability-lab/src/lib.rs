//! Stability apparatus for solved self-consistent resolvent equations.
//!
//! Everything here runs at a single solved point `(ζ, M)`: the balanced
//! polar factorization of `M` and the saturated self-energy operator built
//! from it ([`saturation`]), the closed expression for that operator's
//! spectral radius ([`identity`]), empirical spectral-gap bounds for
//! normalized positivity-preserving maps ([`gap`]), inversion estimates for
//! unitary sandwiches shifted by gapped maps ([`rotation`]), the norm of
//! the inverse linearization ([`norms`]), and the derivative of the
//! solution with respect to additive data defects together with an actual
//! perturbed solver to difference against ([`derivative`]).
//!
//! The verification style is deliberate: hypotheses (sandwich constants,
//! regime thresholds) are fitted or checked on explicit probe families, and
//! the conclusions are then confirmed on dense spectra at small dimension.
//! Reports carry the numbers either way; nothing is asserted past what was
//! computed.

pub mod derivative;
pub mod error;
pub mod gap;
pub mod identity;
pub mod norms;
pub mod report;
pub mod rotation;
pub mod saturation;

pub use derivative::{
    feedback_decay_report, solve_perturbed, FeedbackDecay, PerturbedSolution, SolutionDerivative,
};
pub use error::{Error, Result};
pub use gap::{
    fit_sandwich_bounds, spectral_gap_verify, GapBounds, GapReport, ProbeFit, GAP_PROBE_COUNT,
    GAP_PROBE_SEED,
};
pub use identity::{spectral_radius_identity_check, IdentityReport};
pub use norms::{contraction_norm, far_regime_check, linear_stability_norm, FarRegimeReport};
pub use report::{stability_report, StabilityReport};
pub use rotation::{rotation_inversion_bound, RotationReport};
pub use saturation::{compute_saturation, Saturation, IM_FLOOR, PERRON_CAP};
