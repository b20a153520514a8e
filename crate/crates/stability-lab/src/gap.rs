//! Spectral gap of a normalized self-adjoint, positivity-preserving map.
//!
//! For a map `T` with `‖T‖ = 1` that admits constants `0 < γ ≤ Γ` with
//!
//! ```text
//!     γ ⟨R⟩ 1  ⪯  T[R]  ⪯  Γ ⟨R⟩ 1      for every R ⪰ 0,
//! ```
//!
//! the top eigenvalue is simple, the rest of the spectrum is confined to
//! `[−1 + θ, 1 − θ]` with `θ = γ⁶ / (2Γ⁴)`, and the top eigenmatrix `T̂`,
//! normalized to `⟨T̂⟩ = 1`, satisfies `γ/√Γ · 1 ⪯ T̂ ⪯ Γ · 1`.
//!
//! The constants are an empirical hypothesis here: [`fit_sandwich_bounds`]
//! reads them off a deterministic probe family (the identity plus seeded
//! rank-one matrices, each normalized to unit average trace — extreme
//! points of the positive cone, where the lower constant is attained), and
//! [`spectral_gap_verify`] re-checks the sandwich on the same family before
//! asserting anything about the spectrum. A probe violation yields a
//! hypothesis-failure report with no spectral claims at all.

use herm_core::{
    avg_trace, dense_spectrum_self_adjoint, dense_superop, dense_top_eigenpair_self_adjoint,
    eigh_values, C64, CMat, HermMatrix, SuperOp, DENSE_SUPEROP_CUTOFF,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Probe family size shared by fitting and verification.
pub const GAP_PROBE_COUNT: usize = 200;

/// Seed of the verification probe family. Fitting with the same seed makes
/// the sandwich hypothesis self-consistent by construction; the spectral
/// conclusions are still checked independently on the dense spectrum.
pub const GAP_PROBE_SEED: u64 = 0x0005_AB1E;

const PROBE_TOL: f64 = 1e-9;
const SPECTRUM_TOL: f64 = 1e-8;

/// Sandwich constants read off the probe family.
#[derive(Debug, Clone, Copy)]
pub struct ProbeFit {
    /// Smallest eigenvalue of `T[R]` over unit-average-trace probes.
    pub gamma: f64,
    /// Largest eigenvalue over the same probes.
    pub big_gamma: f64,
}

/// Spectral conclusions, reported only when the sandwich hypothesis held.
#[derive(Debug, Clone, Copy)]
pub struct GapBounds {
    /// `γ⁶ / (2Γ⁴)`.
    pub theta_predicted: f64,
    /// Distance from the top eigenvalue to the second-largest magnitude.
    pub theta_observed: f64,
    pub top_eigenvalue: f64,
    pub top_simple: bool,
    /// Whether all non-top eigenvalues lie in `[−top + θ, top − θ]` for the
    /// predicted `θ`.
    pub spectrum_in_band: bool,
    /// Extreme eigenvalues of the top eigenmatrix after `⟨T̂⟩ = 1`
    /// normalization, and the predicted enclosure `[γ/√Γ, Γ]`.
    pub eigenmatrix_min: f64,
    pub eigenmatrix_max: f64,
    pub eigenmatrix_lower_bound: f64,
    pub eigenmatrix_ok: bool,
}

/// Full verification record: the hypothesis slacks always, the spectral
/// bounds only when the hypothesis survived.
#[derive(Debug, Clone)]
pub struct GapReport {
    pub gamma: f64,
    pub big_gamma: f64,
    pub hypothesis_ok: bool,
    /// Worst value of `min_eig(T[R]) − γ` over the probes; `≥ 0` when the
    /// lower sandwich holds exactly.
    pub lower_slack: f64,
    /// Worst value of `Γ − max_eig(T[R])`.
    pub upper_slack: f64,
    pub bounds: Option<GapBounds>,
}

/// Reads sandwich constants off `probes` deterministic positive probes.
pub fn fit_sandwich_bounds(t: &dyn SuperOp, probes: usize, seed: u64) -> Result<ProbeFit> {
    if probes == 0 {
        return Err(Error::BadParam("at least one probe is required"));
    }
    let n = t.dim();
    if n == 0 {
        return Err(Error::BadParam("operator dimension must be positive"));
    }
    let mut gamma = f64::INFINITY;
    let mut big_gamma = f64::NEG_INFINITY;
    for r in sandwich_probes(n, probes, seed) {
        let (lo, hi) = eig_range(&t.apply(&r))?;
        gamma = gamma.min(lo);
        big_gamma = big_gamma.max(hi);
    }
    Ok(ProbeFit { gamma, big_gamma })
}

/// Checks the sandwich hypothesis for `(γ, Γ)` and, when it holds, verifies
/// the spectral conclusions on the dense spectrum. Dense only: the point is
/// exhaustive inspection, not scale.
pub fn spectral_gap_verify(t: &dyn SuperOp, gamma: f64, big_gamma: f64) -> Result<GapReport> {
    let n = t.dim();
    if n > DENSE_SUPEROP_CUTOFF {
        return Err(Error::TooLarge {
            got: n,
            cutoff: DENSE_SUPEROP_CUTOFF,
        });
    }
    if n < 2 {
        return Err(Error::BadParam("operator dimension must be at least two"));
    }
    if !(gamma > 0.0) || !gamma.is_finite() || !(big_gamma >= gamma) || !big_gamma.is_finite() {
        return Err(Error::BadParam("need 0 < gamma <= big_gamma, both finite"));
    }

    let mut lower_slack = f64::INFINITY;
    let mut upper_slack = f64::INFINITY;
    for r in sandwich_probes(n, GAP_PROBE_COUNT, GAP_PROBE_SEED) {
        let (lo, hi) = eig_range(&t.apply(&r))?;
        lower_slack = lower_slack.min(lo - gamma);
        upper_slack = upper_slack.min(big_gamma - hi);
    }
    let hypothesis_ok = lower_slack >= -PROBE_TOL && upper_slack >= -PROBE_TOL;
    if !hypothesis_ok {
        return Ok(GapReport {
            gamma,
            big_gamma,
            hypothesis_ok,
            lower_slack,
            upper_slack,
            bounds: None,
        });
    }

    let dense = dense_superop(t)?;
    let spectrum = dense_spectrum_self_adjoint(&dense)?;
    let len = spectrum.len();
    let top = spectrum[len - 1];
    let second_signed = spectrum[len - 2];
    let second_abs = spectrum[0].abs().max(second_signed.abs());

    let theta_predicted = gamma.powi(6) / (2.0 * big_gamma.powi(4));
    let theta_observed = top - second_abs;

    let (top_again, t_mat) = dense_top_eigenpair_self_adjoint(&dense)?;
    debug_assert!((top_again - top).abs() <= 1e-10 * top.abs().max(1.0));

    let eigenmatrix_lower_bound = gamma / big_gamma.sqrt();
    let t_avg = avg_trace(t_mat.as_mat()).re;
    let (eigenmatrix_min, eigenmatrix_max, eigenmatrix_ok) = if t_avg.abs() < 1e-12 {
        // A traceless top eigenmatrix already contradicts the sandwich.
        (f64::NAN, f64::NAN, false)
    } else {
        let normalized = HermMatrix::hermitize(&t_mat.as_mat().mapv(|z| z / t_avg))?;
        let vals = eigh_values(&normalized);
        let lo = vals[0];
        let hi = vals[vals.len() - 1];
        let ok =
            lo >= eigenmatrix_lower_bound - SPECTRUM_TOL && hi <= big_gamma + SPECTRUM_TOL;
        (lo, hi, ok)
    };

    Ok(GapReport {
        gamma,
        big_gamma,
        hypothesis_ok,
        lower_slack,
        upper_slack,
        bounds: Some(GapBounds {
            theta_predicted,
            theta_observed,
            top_eigenvalue: top,
            top_simple: top - second_signed > SPECTRUM_TOL,
            spectrum_in_band: theta_observed >= theta_predicted - SPECTRUM_TOL,
            eigenmatrix_min,
            eigenmatrix_max,
            eigenmatrix_lower_bound,
            eigenmatrix_ok,
        }),
    })
}

/// The identity followed by seeded complex-Gaussian rank-ones, each scaled
/// to unit average trace so the sandwich reads `γ ⪯ eig(T[R]) ⪯ Γ` directly.
fn sandwich_probes(n: usize, count: usize, seed: u64) -> Vec<CMat> {
    let mut out = Vec::with_capacity(count);
    out.push(CMat::eye(n));
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    while out.len() < count {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm2 < 1e-12 {
            continue;
        }
        let scale = n as f64 / norm2;
        out.push(CMat::from_shape_fn((n, n), |(x, y)| {
            v[x] * v[y].conj() * scale
        }));
    }
    out
}

fn eig_range(m: &CMat) -> Result<(f64, f64)> {
    // Loose Hermiticity check: a map that fails it is not self-adjoint
    // positivity-preserving, and the caller should hear that, not have the
    // deviation silently averaged away.
    let h = HermMatrix::from_matrix_checked(m, 1e-8)?;
    let vals = eigh_values(&h);
    Ok((vals[0], vals[vals.len() - 1]))
}
