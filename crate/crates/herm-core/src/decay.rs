use crate::error::{Error, Result};
use crate::metric::IndexMetric;
use crate::CMat;

/// Decay levels beyond this resolve nothing at desk-scale dimensions.
pub const DEFAULT_NU_MAX: usize = 8;

/// Positive weight sequence `pi(0), .., pi(nu_max)` for the decay norm.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayProfile {
    pi: Vec<f64>,
}

impl DecayProfile {
    pub fn new(pi: Vec<f64>) -> Result<Self> {
        if pi.is_empty() || pi.iter().any(|v| !(*v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidProfile);
        }
        Ok(DecayProfile { pi })
    }

    pub fn constant(c: f64, nu_max: usize) -> Result<Self> {
        Self::new(vec![c; nu_max + 1])
    }

    /// `pi(nu) = nu!`, a profile certifying faster than power law decay for
    /// geometrically decaying entries.
    pub fn factorial(nu_max: usize) -> Self {
        let mut pi = Vec::with_capacity(nu_max + 1);
        let mut f = 1.0f64;
        pi.push(1.0);
        for nu in 1..=nu_max {
            f *= nu as f64;
            pi.push(f);
        }
        DecayProfile { pi }
    }

    pub fn nu_max(&self) -> usize {
        self.pi.len() - 1
    }

    pub fn weight(&self, nu: usize) -> f64 {
        self.pi[nu]
    }
}

/// Decay norm `sup_nu max_xy |r_xy| / (pi(nu) / (1+d(x,y))^nu + pi(0)/N)`.
///
/// A value `<= 1` certifies off-diagonal decay faster than any tested power,
/// up to a mean-field term of order `1/N`.
pub fn decay_norm(m: &CMat, metric: &IndexMetric, profile: &DecayProfile) -> f64 {
    let n = m.nrows();
    let nf = n as f64;
    let floor = profile.weight(0) / nf;
    let mut worst = 0.0f64;
    for x in 0..n {
        for y in 0..n {
            let r = m[(x, y)].norm();
            if r == 0.0 {
                continue;
            }
            let d = metric.dist(x, y);
            for nu in 0..=profile.nu_max() {
                let denom = profile.weight(nu) / (1.0 + d).powi(nu as i32) + floor;
                let ratio = r / denom;
                if ratio > worst {
                    worst = ratio;
                }
            }
        }
    }
    worst
}
