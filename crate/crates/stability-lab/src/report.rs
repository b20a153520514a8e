//! One-call diagnostic bundle for a solved point.

use herm_core::{C64, Scaled, DENSE_SUPEROP_CUTOFF};
use mde_solver::MdeSolution;
use self_energy::SelfEnergy;
use serde::Serialize;

use crate::error::Result;
use crate::gap::{fit_sandwich_bounds, spectral_gap_verify, GAP_PROBE_COUNT, GAP_PROBE_SEED};
use crate::norms::linear_stability_norm;
use crate::saturation::compute_saturation;

/// The headline stability numbers of one solution, JSON-serializable for
/// experiment logs. Gap fields are `NaN` (serialized as `null`) when the
/// saturated operator vanishes or the dimension exceeds the dense cutoff
/// used by the gap verification.
#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub sp_radius: f64,
    pub gap_predicted: f64,
    pub gap_observed: f64,
    pub stability_norm: f64,
    pub polar_residual: f64,
    pub identity_residual: f64,
}

pub fn stability_report(sol: &MdeSolution, s: &SelfEnergy) -> Result<StabilityReport> {
    let sat = compute_saturation(sol, s)?;
    let stability_norm = linear_stability_norm(sol, s, 1e-10)?;

    let mut gap_predicted = f64::NAN;
    if sat.dim() <= DENSE_SUPEROP_CUTOFF && sat.sp_radius() > 1e-12 {
        let normalized = Scaled {
            c: C64::new(1.0 / sat.sp_radius(), 0.0),
            op: &sat,
        };
        let fit = fit_sandwich_bounds(&normalized, GAP_PROBE_COUNT, GAP_PROBE_SEED)?;
        if fit.gamma > 0.0 {
            let report = spectral_gap_verify(&normalized, fit.gamma, fit.big_gamma)?;
            if let Some(bounds) = report.bounds {
                gap_predicted = bounds.theta_predicted;
            }
        }
    }

    Ok(StabilityReport {
        sp_radius: sat.sp_radius(),
        gap_predicted,
        gap_observed: if sat.sp_radius() > 1e-12 {
            sat.gap()
        } else {
            f64::NAN
        },
        stability_norm,
        polar_residual: sat.polar_residual(),
        identity_residual: sat.identity_residual(),
    })
}

impl StabilityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("a struct of floats serializes")
    }
}
