use std::io::{self, Write};

use crate::error::{Error, Result};

/// One evaluated energy: the density at the working height and its
/// real-line extrapolation. Failed solves leave a hole (`converged = false`,
/// densities NaN) without losing the rest of the curve.
#[derive(Debug, Clone, Copy)]
pub struct DosPoint {
    pub tau: f64,
    pub eta: f64,
    pub rho: f64,
    pub rho_extrapolated: f64,
    pub converged: bool,
}

/// Density-of-states curve over an ascending energy grid.
#[derive(Debug, Clone)]
pub struct DosCurve {
    points: Vec<DosPoint>,
    extrapolated: bool,
}

impl DosCurve {
    pub fn new(points: Vec<DosPoint>, extrapolated: bool) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadGrid("curve needs at least one point"));
        }
        if points.iter().any(|p| !p.tau.is_finite()) {
            return Err(Error::BadGrid("energies must be finite"));
        }
        if points.windows(2).any(|w| w[1].tau <= w[0].tau) {
            return Err(Error::BadGrid("energies must be strictly ascending"));
        }
        for p in &points {
            if p.converged && !(p.rho >= 0.0 && p.rho_extrapolated >= 0.0) {
                return Err(Error::BadParam("densities must be nonnegative"));
            }
        }
        Ok(DosCurve {
            points,
            extrapolated,
        })
    }

    pub fn points(&self) -> &[DosPoint] {
        &self.points
    }

    pub fn is_extrapolated(&self) -> bool {
        self.extrapolated
    }

    /// The density column downstream consumers should read: the real-line
    /// extrapolation when one was made, the working-height value otherwise.
    pub fn effective_rho(&self, p: &DosPoint) -> f64 {
        if self.extrapolated {
            p.rho_extrapolated
        } else {
            p.rho
        }
    }

    /// `(tau, rho)` polyline of the converged points.
    pub(crate) fn polyline(&self) -> Vec<(f64, f64)> {
        self.points
            .iter()
            .filter(|p| p.converged)
            .map(|p| (p.tau, self.effective_rho(p)))
            .collect()
    }

    /// Trapezoid mass of the converged polyline; near 1 when the grid covers
    /// the whole support.
    pub fn total_mass(&self) -> f64 {
        trapezoid_mass(&self.polyline(), f64::INFINITY)
    }

    /// Columns: tau, eta, rho, rho_extrapolated, converged. Full-precision
    /// scientific notation so reruns are byte-comparable.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "tau,eta,rho,rho_extrapolated,converged")?;
        for p in &self.points {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e},{}",
                p.tau, p.eta, p.rho, p.rho_extrapolated, p.converged
            )?;
        }
        Ok(())
    }
}

/// Integral of the polyline from its left end up to `limit` by trapezoids,
/// interpolating inside the cell containing `limit`.
pub(crate) fn trapezoid_mass(poly: &[(f64, f64)], limit: f64) -> f64 {
    let mut acc = 0.0;
    for w in poly.windows(2) {
        let (t0, r0) = w[0];
        let (t1, r1) = w[1];
        if limit <= t0 {
            break;
        }
        if limit >= t1 {
            acc += 0.5 * (r0 + r1) * (t1 - t0);
        } else {
            let f = (limit - t0) / (t1 - t0);
            let rl = r0 + (r1 - r0) * f;
            acc += 0.5 * (r0 + rl) * (limit - t0);
            break;
        }
    }
    acc
}
