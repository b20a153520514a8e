//! Probe-based flatness estimates: how far `S[R]` can drift from `⟨R⟩·1`
//! over PSD inputs.

use herm_core::{avg_trace, eigh_values, C64, CMat, HermMatrix, SuperOp};
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

use crate::variants::SelfEnergy;

pub const FLATNESS_RANDOM_PROBES: usize = 64;

/// Two-sided flatness estimate over a finite probe family. `lower > 0`
/// means every probe satisfied `S[R] ≥ lower·⟨R⟩·1`; these are certified
/// bounds on the probe set only, reported as estimates for the operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatnessBounds {
    pub lower: f64,
    pub upper: f64,
}

impl FlatnessBounds {
    pub fn is_flat(&self) -> bool {
        self.lower > 0.0
    }
}

/// Scans PSD probes: the identity, every canonical projector `e_x e_x^*`,
/// and `FLATNESS_RANDOM_PROBES` random rank-one `v v^*`. For each probe the
/// eigenvalue range of `S[R]` is divided by `⟨R⟩`.
pub fn flatness_bounds(s: &SelfEnergy, seed: u64) -> FlatnessBounds {
    let n = s.dim();
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;

    let mut scan = |probe: &CMat| {
        let tr = avg_trace(probe).re;
        debug_assert!(tr > 0.0, "flatness probes must have positive trace");
        let out = s.apply(probe);
        let h = HermMatrix::hermitize(&out).expect("S produced non-finite entries");
        let vals = eigh_values(&h);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        lower = lower.min(lo / tr);
        upper = upper.max(hi / tr);
    };

    scan(&CMat::eye(n));
    for x in 0..n {
        let mut e = CMat::zeros((n, n));
        e[(x, x)] = C64::new(1.0, 0.0);
        scan(&e);
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..FLATNESS_RANDOM_PROBES {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let probe = CMat::from_shape_fn((n, n), |(x, y)| v[x] * v[y].conj());
        scan(&probe);
    }

    FlatnessBounds { lower, upper }
}
