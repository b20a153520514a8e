//! Shared fixtures: data pairs with known closed forms and seeded random
//! ones, solved tightly enough that factorization residuals are dominated
//! by the quantity under test, not by the solver.

#![allow(dead_code)]

use herm_core::{C64, CMat, HermMatrix};
use mde_solver::{solve_at, DataPair, MdeSolution, SolverConfig, SpectralParam};
use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use self_energy::{Beta, SelfEnergy};

/// `(√5 − 1)/2`: the height of the flat-ensemble solution at `ζ = i`,
/// satisfying `b² = 1 − b`.
pub fn golden() -> f64 {
    (5.0f64.sqrt() - 1.0) / 2.0
}

pub fn tight_cfg() -> SolverConfig {
    SolverConfig {
        tol: 1e-13,
        max_iter: 100_000,
        ..SolverConfig::default()
    }
}

pub fn solve(data: &DataPair, re: f64, im: f64) -> MdeSolution {
    solve_at(
        data,
        SpectralParam::from_parts(re, im).expect("valid spectral parameter"),
        &tight_cfg(),
        None,
    )
    .expect("fixture point must solve")
}

/// Zero expectation with the flat mean-field kernel.
pub fn wigner_pair(n: usize) -> DataPair {
    DataPair::new(HermMatrix::zeros(n), SelfEnergy::mean_field(n, 1.0), None)
        .expect("valid fixture")
}

/// Gaussian Hermitian matrix, entries of scale `scale/√n` so the operator
/// norm stays around `2·scale`.
pub fn random_herm(n: usize, scale: f64, rng: &mut ChaCha12Rng) -> HermMatrix {
    let s = scale / (n as f64).sqrt();
    let mut m = CMat::zeros((n, n));
    for x in 0..n {
        let d: f64 = rng.sample(StandardNormal);
        m[(x, x)] = C64::new(d * s, 0.0);
        for y in 0..x {
            let z = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
                * C64::new(s / 2f64.sqrt(), 0.0);
            m[(x, y)] = z;
            m[(y, x)] = z.conj();
        }
    }
    HermMatrix::hermitize(&m).expect("finite Hermitian fixture")
}

/// Random Hermitian expectation with the flat kernel.
pub fn flat_random_pair(n: usize, seed: u64) -> DataPair {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let a = random_herm(n, 0.5, &mut rng);
    DataPair::new(a, SelfEnergy::mean_field(n, 1.0), None).expect("valid fixture")
}

/// Random expectation with a strictly positive variance profile, so the
/// saturated operator has genuine Perron structure (`γ > 0`).
pub fn profile_random_pair(n: usize, seed: u64) -> DataPair {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut s = Array2::<f64>::zeros((n, n));
    for x in 0..n {
        for y in 0..=x {
            let v = 0.5 + rng.random::<f64>();
            s[(x, y)] = v;
            s[(y, x)] = v;
        }
    }
    let profile = SelfEnergy::variance_profile(s, Beta::Two).expect("valid profile");
    let a = random_herm(n, 0.3, &mut rng);
    DataPair::new(a, profile, None).expect("valid fixture")
}

/// Random Hermitian direction with unit entrywise max norm.
pub fn unit_direction(n: usize, rng: &mut ChaCha12Rng) -> CMat {
    let h = random_herm(n, 1.0, rng);
    let scale = herm_core::max_norm(h.as_mat());
    h.as_mat().mapv(|z| z / scale)
}
