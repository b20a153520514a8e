//! Support and gap detection.

use mde_solver::DataPair;

use crate::curve::DosCurve;
use crate::error::{Error, Result};

/// Default threshold for [`estimate_support`]; callers studying faint bulk
/// components pass their own.
pub const DEFAULT_SUPPORT_DELTA: f64 = 0.01;

/// A priori bound: the density vanishes outside `[-kappa, kappa]` with
/// `kappa = ‖A‖ + 2·sqrt(‖S‖)`.
pub fn support_bound(data: &DataPair) -> f64 {
    data.kappa()
}

/// Thresholded support read off a solved density curve.
#[derive(Debug, Clone)]
pub struct SupportEstimate {
    /// Outermost grid energies whose density clears the threshold, or
    /// `None` when no point does (support invisible at this threshold).
    pub bulk: Option<(f64, f64)>,
    /// Maximal sub-threshold runs strictly between bulk components. Each
    /// interval spans from the last above-threshold energy before the run
    /// to the first one after it.
    pub gaps: Vec<(f64, f64)>,
    /// Threshold the estimate was taken at.
    pub delta: f64,
}

/// Reads the support off a curve: bulk endpoints are the outermost grid
/// energies with density at least `delta`, and every maximal dip below
/// `delta` between them is reported as an internal gap.
///
/// Unconverged points carry no density information and are skipped, so a
/// dip made solely of failed solves is not reported as a gap.
pub fn estimate_support(curve: &DosCurve, delta: f64) -> Result<SupportEstimate> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::BadParam("delta must be positive and finite"));
    }
    let known = curve.polyline();
    let above: Vec<usize> = (0..known.len()).filter(|&i| known[i].1 >= delta).collect();
    let (Some(&first), Some(&last)) = (above.first(), above.last()) else {
        return Ok(SupportEstimate {
            bulk: None,
            gaps: Vec::new(),
            delta,
        });
    };
    let mut gaps = Vec::new();
    for w in above.windows(2) {
        if w[1] > w[0] + 1 {
            gaps.push((known[w[0]].0, known[w[1]].0));
        }
    }
    Ok(SupportEstimate {
        bulk: Some((known[first].0, known[last].0)),
        gaps,
        delta,
    })
}
