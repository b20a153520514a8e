//! Continuation in the spectral parameter.
//!
//! Solutions at neighboring heights are close, so descending a geometric
//! grid in `eta` and warm-starting each solve from the previous one reaches
//! small heights in a handful of cheap solves where a cold start would crawl.

use herm_core::CMat;

use crate::error::{Error, Result};
use crate::solve::solve_at;
use crate::types::{DataPair, MdeSolution, SolverConfig, SpectralParam};

/// One continuation stop: the height, the density read off there, and the
/// full solution.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub eta: f64,
    pub rho: f64,
    pub solution: MdeSolution,
}

/// Geometric grid with ratio 1/2 from `max(10, 2·kappa)` down to `eta_min`,
/// which is always the exact final entry.
pub fn default_eta_grid(kappa: f64, eta_min: f64) -> Result<Vec<f64>> {
    if !(eta_min > 0.0 && eta_min.is_finite()) {
        return Err(Error::BadGrid("eta_min must be positive and finite"));
    }
    if !(kappa >= 0.0 && kappa.is_finite()) {
        return Err(Error::BadGrid("kappa must be nonnegative and finite"));
    }
    let start = (2.0 * kappa).max(10.0);
    let mut grid = Vec::new();
    let mut eta = start;
    while eta > eta_min * 1.0001 {
        grid.push(eta);
        eta *= 0.5;
    }
    grid.push(eta_min);
    Ok(grid)
}

fn validate_grid(etas: &[f64]) -> Result<()> {
    if etas.is_empty() {
        return Err(Error::BadGrid("grid must be nonempty"));
    }
    if etas.iter().any(|e| !(*e > 0.0 && e.is_finite())) {
        return Err(Error::BadGrid("heights must be positive and finite"));
    }
    if etas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::BadGrid("heights must be strictly descending"));
    }
    Ok(())
}

/// Solves along `tau + i·eta` for every height in the descending grid,
/// warm-starting each solve from its predecessor. Returns every stop.
pub fn continuation_sweep(
    data: &DataPair,
    tau: f64,
    etas: &[f64],
    cfg: &SolverConfig,
) -> Result<Vec<SweepPoint>> {
    validate_grid(etas)?;
    let mut out = Vec::with_capacity(etas.len());
    let mut warm: Option<CMat> = None;
    for &eta in etas {
        let sol = solve_at(data, SpectralParam::from_parts(tau, eta)?, cfg, warm.as_ref())?;
        warm = Some(sol.m.clone());
        out.push(SweepPoint {
            eta,
            rho: sol.density(),
            solution: sol,
        });
    }
    Ok(out)
}

/// Memory-lean continuation: records `(eta, rho)` at every stop but keeps
/// only the final solution. The variant to use at large dimension, where a
/// full sweep would hold every intermediate matrix alive.
pub fn continuation_trace(
    data: &DataPair,
    tau: f64,
    etas: &[f64],
    cfg: &SolverConfig,
) -> Result<(Vec<(f64, f64)>, MdeSolution)> {
    validate_grid(etas)?;
    let mut trace = Vec::with_capacity(etas.len());
    let mut last: Option<MdeSolution> = None;
    for &eta in etas {
        let sol = solve_at(
            data,
            SpectralParam::from_parts(tau, eta)?,
            cfg,
            last.as_ref().map(|s| &s.m),
        )?;
        trace.push((eta, sol.density()));
        last = Some(sol);
    }
    Ok((trace, last.expect("nonempty grid")))
}
