mod common;

use common::random_taps;
use herm_core::{DecayProfile, IndexMetric, DEFAULT_NU_MAX};
use ndarray::Array2;
use num_complex::Complex64 as C64;
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;
use self_energy::{decay_check, Beta, CovarianceKernel, KernelOrigin, SelfEnergy};

#[test]
fn mean_field_passes_unit_profile() {
    let n = 16;
    let s = SelfEnergy::mean_field(n, 1.0);
    let metric = IndexMetric::circle(n);
    let profile = DecayProfile::constant(1.0, DEFAULT_NU_MAX).unwrap();
    let report = decay_check(&s, &metric, &profile, 3);
    assert!(report.passed, "worst = {}", report.worst);
}

#[test]
fn finite_range_kernel_passes_matched_profile() {
    // A range-3 banded kernel spreads entries at circle distance ≤ 3;
    // the profile pi(nu) = bound · (1+3)^nu dominates every probe image
    // because (4/(1+d))^nu ≥ 1 inside the band.
    let n = 24;
    let mut rng = ChaCha12Rng::seed_from_u64(70);
    // Pad a half-width-1 filter (range 2) out to declared range 3.
    let taps = random_taps(&mut rng, 1);
    let base = CovarianceKernel::from_filter(n, Beta::Two, taps.clone(), 0.1).unwrap();
    let w = 2 * 3 + 1;
    let mut par = Array2::zeros((w, w));
    for a in 0..5 {
        for b in 0..5 {
            par[(a + 1, b + 1)] = padded_value(&base, a, b);
        }
    }
    let k =
        CovarianceKernel::new(n, Beta::Two, 3, par, Array2::zeros((w, w)), KernelOrigin::General)
            .unwrap();
    let bound = k.entry_bound();
    let profile =
        DecayProfile::new((0..=DEFAULT_NU_MAX).map(|nu| bound * 4f64.powi(nu as i32)).collect())
            .unwrap();
    let s = SelfEnergy::Kernel(k);
    let metric = IndexMetric::circle(n);
    let report = decay_check(&s, &metric, &profile, 3);
    assert!(report.passed, "worst = {}", report.worst);
}

fn padded_value(base: &CovarianceKernel, a: usize, b: usize) -> C64 {
    // Reads the range-2 table of `base` through kernel values at fixed
    // representative indices: value(0, u, v, 0+dy) with u=0 picks the
    // parallel channel entry par(v, dy).
    let n = base.dim();
    let p = a as i64 - 2;
    let dy = b as i64 - 2;
    let idx = |d: i64| -> usize { d.rem_euclid(n as i64) as usize };
    base.value(0, 0, idx(p), idx(dy))
}

#[test]
fn dense_random_kernel_fails_small_profiles() {
    let n = 9;
    let mut rng = ChaCha12Rng::seed_from_u64(71);
    let r = 4; // 2r < n: maximal range, every offset reachable
    let w = 2 * r + 1;
    let mut raw = Array2::from_shape_fn((w, w), |_| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    // Impose the two covariance symmetries: reversal, then conjugate swap.
    let rev = Array2::from_shape_fn((w, w), |(a, b)| raw[(w - 1 - a, w - 1 - b)]);
    raw = (&raw + &rev).mapv(|z| z * 0.5);
    let swp = Array2::from_shape_fn((w, w), |(a, b)| raw[(b, a)].conj());
    raw = (&raw + &swp).mapv(|z| z * 0.5);
    let k = CovarianceKernel::new(
        n,
        Beta::Two,
        r,
        raw,
        Array2::zeros((w, w)),
        KernelOrigin::General,
    )
    .unwrap();
    let s = SelfEnergy::Kernel(k);
    let metric = IndexMetric::circle(n);
    let profile = DecayProfile::constant(0.01, DEFAULT_NU_MAX).unwrap();
    let report = decay_check(&s, &metric, &profile, 3);
    assert!(!report.passed, "dense kernel must overflow a tiny profile");
}
