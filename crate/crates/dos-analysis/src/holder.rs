//! Empirical Hölder regularity of a density curve.
//!
//! The density is Hölder continuous for some universal exponent, but the
//! exponent itself is not pinned down; this check reports, for a few
//! candidate exponents, the largest empirical modulus over neighboring grid
//! points and which exponents stay bounded. Informational only — callers
//! must not turn a particular exponent into a hard assertion.

use crate::curve::DosCurve;
use crate::error::{Error, Result};

/// Candidate exponents, coarsest to smoothest.
pub const HOLDER_EXPONENTS: [f64; 3] = [1.0 / 3.0, 0.5, 1.0];

/// Constants below this are considered bounded. Calibrated against the
/// semicircle at grid step 0.05: bulk Lipschitz constants sit near 0.2,
/// while crossing a square-root edge pushes the c = 1 constant past 1.3.
pub const HOLDER_BOUND: f64 = 1.0;

/// One candidate exponent with its empirical constant
/// `max |rho(t1) - rho(t0)| / |t1 - t0|^c` over neighboring points.
#[derive(Debug, Clone, Copy)]
pub struct HolderFit {
    pub exponent: f64,
    pub constant: f64,
}

#[derive(Debug, Clone)]
pub struct HolderReport {
    /// One fit per candidate exponent, in [`HOLDER_EXPONENTS`] order.
    pub fits: Vec<HolderFit>,
    /// Largest candidate exponent whose constant stays under the bound,
    /// `None` when even the coarsest blows up.
    pub largest_bounded: Option<f64>,
    /// The boundedness cutoff used ([`HOLDER_BOUND`]).
    pub bound: f64,
}

/// Fits the empirical Hölder modulus of the curve for each candidate
/// exponent. Needs at least 10 grid points for the moduli to mean anything.
pub fn holder_check(curve: &DosCurve) -> Result<HolderReport> {
    if curve.points().len() < 10 {
        return Err(Error::BadParam("holder check needs at least 10 grid points"));
    }
    let known = curve.polyline();
    let fits: Vec<HolderFit> = HOLDER_EXPONENTS
        .iter()
        .map(|&c| {
            let constant = known
                .windows(2)
                .map(|w| (w[1].1 - w[0].1).abs() / (w[1].0 - w[0].0).powf(c))
                .fold(0.0, f64::max);
            HolderFit { exponent: c, constant }
        })
        .collect();
    let largest_bounded = fits
        .iter()
        .filter(|f| f.constant <= HOLDER_BOUND)
        .map(|f| f.exponent)
        .fold(None, |acc: Option<f64>, c| Some(acc.map_or(c, |a| a.max(c))));
    Ok(HolderReport {
        fits,
        largest_bounded,
        bound: HOLDER_BOUND,
    })
}
