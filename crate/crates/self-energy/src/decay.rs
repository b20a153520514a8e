//! Decay certification: does `S` map max-norm-bounded probes into matrices
//! whose entries fall off at the declared polynomial rates?

use herm_core::{decay_norm, C64, CMat, DecayProfile, IndexMetric, SuperOp};
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

use crate::variants::SelfEnergy;

pub const DECAY_RANDOM_PROBES: usize = 8;

#[derive(Debug, Clone)]
pub struct DecayReport {
    /// Largest decay norm seen across probes.
    pub worst: f64,
    /// Number of probes evaluated.
    pub probes: usize,
    pub passed: bool,
}

/// Applies `S` to probes with `‖R‖_max = 1` — identity, all-ones, and random
/// Hermitian sign matrices — and checks `decay_norm(S[R]) ≤ 1` for each.
pub fn decay_check(
    s: &SelfEnergy,
    metric: &IndexMetric,
    profile: &DecayProfile,
    seed: u64,
) -> DecayReport {
    let n = s.dim();
    let mut worst = 0.0f64;
    let mut probes = 0usize;

    let mut scan = |probe: &CMat| {
        let out = s.apply(probe);
        worst = worst.max(decay_norm(&out, metric, profile));
        probes += 1;
    };

    scan(&CMat::eye(n));
    scan(&CMat::from_elem((n, n), C64::new(1.0, 0.0)));
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..DECAY_RANDOM_PROBES {
        let mut m = CMat::zeros((n, n));
        for x in 0..n {
            for y in x..n {
                let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                m[(x, y)] = C64::new(sign, 0.0);
                m[(y, x)] = C64::new(sign, 0.0);
            }
        }
        scan(&m);
    }

    DecayReport {
        worst,
        probes,
        passed: worst <= 1.0,
    }
}
