#![allow(dead_code)]

use herm_core::{C64, CMat, HermMatrix};
use mde_solver::DataPair;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use self_energy::SelfEnergy;

/// Flat ensemble with unit mean-field covariance and zero expectation; its
/// solution is the scalar semicircle transform times the identity.
pub fn wigner_pair(n: usize) -> DataPair {
    DataPair::new(HermMatrix::zeros(n), SelfEnergy::mean_field(n, 1.0), None).unwrap()
}

/// Upper-half-plane root of `m^2 + z·m + 1 = 0`, the scalar self-consistent
/// solution for the flat ensemble.
pub fn scalar_semicircle(z: C64) -> C64 {
    let root = (z * z - 4.0).sqrt();
    let a = (-z + root) / 2.0;
    let b = (-z - root) / 2.0;
    if a.im > 0.0 {
        a
    } else {
        b
    }
}

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn random_herm(n: usize, seed: u64) -> HermMatrix {
    let mut r = rng(seed);
    HermMatrix::from_upper(n, |_, _| {
        C64::new(r.random::<f64>() - 0.5, r.random::<f64>() - 0.5)
    })
    .unwrap()
}

/// Hermitian matrix with strictly positive-definite imaginary part, for
/// warm-start uniqueness probes.
pub fn random_upper_half_point(n: usize, seed: u64) -> CMat {
    let re = random_herm(n, seed);
    let im = random_herm(n, seed.wrapping_add(1));
    let gram = im.as_mat().dot(&herm_core::adjoint(im.as_mat()));
    CMat::from_shape_fn((n, n), |(x, y)| {
        re.as_mat()[(x, y)] + C64::new(0.0, 1.0) * (gram[(x, y)] + if x == y { 0.3 } else { 0.0 })
    })
}

pub fn max_dev(a: &CMat, b: &CMat) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
