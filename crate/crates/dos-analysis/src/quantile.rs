//! Quantile map from energies to eigenvalue indices.

use crate::curve::{trapezoid_mass, DosCurve};
use crate::error::{Error, Result};

/// Index of the eigenvalue expected at energy `tau` among `n`: the smallest
/// integer at or above `n` times the density mass left of `tau`.
///
/// The mass is normalized by the curve's own total, so the extremes map to
/// exactly `0` and `n` even when the grid integral is slightly off one.
/// Quadrature noise below `1e-6` of an index is absorbed so that exact
/// half-mass energies of symmetric curves land on `n/2`, not above it.
pub fn quantile_index(curve: &DosCurve, tau: f64, n: usize) -> Result<usize> {
    if !tau.is_finite() {
        return Err(Error::BadParam("tau must be finite"));
    }
    if n == 0 {
        return Err(Error::BadParam("index range must be nonempty"));
    }
    let poly = curve.polyline();
    if poly.len() < 2 {
        return Err(Error::BadParam("curve needs at least two converged points"));
    }
    let total = trapezoid_mass(&poly, f64::INFINITY);
    if !(total > 0.0) {
        return Err(Error::BadParam("curve carries no mass"));
    }
    let frac = trapezoid_mass(&poly, tau) / total;
    let idx = (n as f64 * frac - 1e-6).ceil().clamp(0.0, n as f64);
    Ok(idx as usize)
}
