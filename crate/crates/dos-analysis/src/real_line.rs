//! Continuation to the real line.
//!
//! The density has a continuous extension to real energies, but it can only
//! be computed at positive heights; the gap is closed by Richardson
//! extrapolation on the tail of a geometric height ladder. With heights
//! `(4h, 2h, h)` and a smooth expansion `rho(eta) = rho0 + c1·eta + c2·eta^2
//! + ...`, the combination `(8·rho(h) - 6·rho(2h) + rho(4h)) / 3` cancels
//! both correction orders.

use mde_solver::{continuation_trace, default_eta_grid, DataPair, MdeSolution, SolverConfig};

use crate::curve::{DosCurve, DosPoint};
use crate::error::{Error, Result};

/// Density read off one solution: `Im<M>/pi`.
pub fn harmonic_dos(sol: &MdeSolution) -> f64 {
    sol.density()
}

/// Highest supported extrapolation order (quadratic, three heights).
pub const MAX_EXTRAPOLATION_ORDER: usize = 2;

/// Evaluates the density on an ascending energy grid at height `eta_target`,
/// with an order-`order` extrapolated real-line estimate per point.
///
/// Each energy runs its own warm-started descent; a solver failure marks
/// that point unconverged and the curve is returned without it.
pub fn dos_on_real_line(
    data: &DataPair,
    taus: &[f64],
    eta_target: f64,
    order: usize,
    cfg: &SolverConfig,
) -> Result<DosCurve> {
    if taus.is_empty() {
        return Err(Error::BadGrid("energy grid must be nonempty"));
    }
    if taus.iter().any(|t| !t.is_finite()) {
        return Err(Error::BadGrid("energies must be finite"));
    }
    if taus.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::BadGrid("energies must be strictly ascending"));
    }
    if !(eta_target > 0.0 && eta_target.is_finite()) {
        return Err(Error::BadParam("eta_target must be positive and finite"));
    }
    if order > MAX_EXTRAPOLATION_ORDER {
        return Err(Error::BadParam("extrapolation order is at most 2"));
    }
    let etas = dos_eta_ladder(data.kappa(), eta_target, order)?;

    let mut points = Vec::with_capacity(taus.len());
    for &tau in taus {
        match continuation_trace(data, tau, &etas, cfg) {
            Ok((trace, _)) => {
                let rho = trace.last().expect("nonempty ladder").1;
                let ext = extrapolate(&trace, order);
                points.push(DosPoint {
                    tau,
                    eta: eta_target,
                    rho,
                    // Stencils can overshoot slightly below zero where the
                    // density vanishes; the true limit is nonnegative.
                    rho_extrapolated: ext.max(0.0),
                    converged: true,
                });
            }
            Err(mde_solver::Error::BadGrid(msg)) => return Err(Error::BadGrid(msg)),
            Err(_) => points.push(DosPoint {
                tau,
                eta: eta_target,
                rho: f64::NAN,
                rho_extrapolated: f64::NAN,
                converged: false,
            }),
        }
    }
    DosCurve::new(points, order > 0)
}

/// Height ladder used by [`dos_on_real_line`]: a coarse warm-up descent
/// ending exactly at the top of the extrapolation stencil, followed by the
/// halving tail down to `eta_target`. The tail heights are exact powers of
/// two times `eta_target` — the spacing the stencil coefficients assume.
pub fn dos_eta_ladder(kappa: f64, eta_target: f64, order: usize) -> Result<Vec<f64>> {
    if order > MAX_EXTRAPOLATION_ORDER {
        return Err(Error::BadParam("extrapolation order is at most 2"));
    }
    let anchor = eta_target * (1 << order) as f64;
    let mut etas = default_eta_grid(kappa, anchor)?;
    for k in (0..order).rev() {
        etas.push(eta_target * (1 << k) as f64);
    }
    Ok(etas)
}

fn extrapolate(trace: &[(f64, f64)], order: usize) -> f64 {
    let last = |k: usize| trace[trace.len() - 1 - k].1;
    match order {
        0 => last(0),
        1 => 2.0 * last(0) - last(1),
        _ => (8.0 * last(0) - 6.0 * last(1) + last(2)) / 3.0,
    }
}
