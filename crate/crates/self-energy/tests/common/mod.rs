// Each test binary pulls in the subset it needs.
#![allow(dead_code)]

use herm_core::{C64, CMat};
use ndarray::Array2;
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;
use self_energy::{Beta, CovarianceKernel, FilterTaps};

pub fn random_cmat(rng: &mut ChaCha12Rng, n: usize) -> CMat {
    CMat::from_shape_fn((n, n), |_| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    })
}

pub fn random_herm(rng: &mut ChaCha12Rng, n: usize) -> CMat {
    let m = random_cmat(rng, n);
    let madj = herm_core::adjoint(&m);
    (&m + &madj).mapv(|z| z * 0.5)
}

pub fn random_taps(rng: &mut ChaCha12Rng, half_width: usize) -> FilterTaps {
    let w = 2 * half_width + 1;
    let taps = Array2::from_shape_fn((w, w), |_| rng.random::<f64>() + 0.2);
    FilterTaps::new(half_width, taps).unwrap()
}

pub fn random_filter_kernel(
    rng: &mut ChaCha12Rng,
    n: usize,
    beta: Beta,
    half_width: usize,
    floor: f64,
) -> CovarianceKernel {
    CovarianceKernel::from_filter(n, beta, random_taps(rng, half_width), floor).unwrap()
}

/// O(N⁴) reference contraction straight from the kernel values.
pub fn brute_force_apply(k: &CovarianceKernel, r: &CMat) -> CMat {
    let n = k.dim();
    let mut out = CMat::zeros((n, n));
    for x in 0..n {
        for y in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for u in 0..n {
                for v in 0..n {
                    acc += k.value(x, u, v, y) * r[(u, v)];
                }
            }
            out[(x, y)] = acc / C64::new(n as f64, 0.0);
        }
    }
    out
}

pub fn max_dev(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
