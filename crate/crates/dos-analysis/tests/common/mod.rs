#![allow(dead_code)]

use std::f64::consts::PI;

use dos_analysis::{dos_on_real_line, DosCurve};
use herm_core::HermMatrix;
use mde_solver::{DataPair, SolverConfig};
use self_energy::SelfEnergy;

/// Flat ensemble: zero expectation, mean-field covariance of unit strength.
/// Its self-consistent density is the semicircle on [-2, 2] at any dimension.
pub fn wigner_pair(n: usize) -> DataPair {
    DataPair::new(HermMatrix::zeros(n), SelfEnergy::mean_field(n, 1.0), None).unwrap()
}

/// Two diagonal blocks at `±a` with mean-field covariance; for `a` well
/// above the semicircle radius the density splits into two bulk components.
pub fn two_block_pair(n: usize, a: f64) -> DataPair {
    let mut d = vec![a; n];
    for v in d.iter_mut().skip(n / 2) {
        *v = -a;
    }
    DataPair::new(
        HermMatrix::from_real_diag(&d),
        SelfEnergy::mean_field(n, 1.0),
        None,
    )
    .unwrap()
}

pub fn rho_sc(tau: f64) -> f64 {
    (4.0 - tau * tau).max(0.0).sqrt() / (2.0 * PI)
}

pub fn linspace(a: f64, b: f64, k: usize) -> Vec<f64> {
    assert!(k >= 2);
    (0..k)
        .map(|i| a + (b - a) * i as f64 / (k - 1) as f64)
        .collect()
}

/// Extrapolated semicircle curve used across the suite. The target height
/// 0.002 keeps the quadratic-stencil truncation error at the spectral edge
/// near 5e-3, inside the 1e-2 oracle tolerance.
pub fn semicircle_curve(lo: f64, hi: f64, k: usize) -> DosCurve {
    dos_on_real_line(
        &wigner_pair(8),
        &linspace(lo, hi, k),
        2e-3,
        2,
        &SolverConfig::default(),
    )
    .unwrap()
}
