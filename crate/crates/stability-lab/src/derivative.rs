//! Derivative of the solution map with respect to additive data defects.
//!
//! Adding a defect `D` to the defining equation,
//!
//! ```text
//!     −1 = (ζ·1 − A + S[𝒢(D)]) 𝒢(D) + D,
//! ```
//!
//! selects a perturbed solution branch `𝒢(D)` with `𝒢(0) = M`.
//! Differentiating at `D = 0` and solving for the derivative gives
//!
//! ```text
//!     𝒢'(0)[D] = (Id − C_M S)^{-1}[M D],
//! ```
//!
//! the direct term `M D` plus the feedback of the perturbation through the
//! self-energy. [`SolutionDerivative`] evaluates both through the Neumann
//! solver of the linear stability operator; [`solve_perturbed`] produces
//! `𝒢(D)` itself by a damped fixed-point iteration warm-started at `M`, so
//! finite differences of actual solutions can be checked against the
//! analytic derivative.

use herm_core::{decay_norm, inverse, max_norm, C64, CMat, DecayProfile, IndexMetric, SuperOp};
use mde_solver::{DataPair, MdeSolution, StabilityOp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use self_energy::SelfEnergy;

use crate::error::{Error, Result};

pub struct SolutionDerivative<'a> {
    stab: StabilityOp<'a>,
    m: &'a CMat,
    tol: f64,
}

impl<'a> SolutionDerivative<'a> {
    pub fn new(sol: &'a MdeSolution, s: &'a SelfEnergy, tol: f64) -> Result<Self> {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::BadParam("tol must be a positive finite number"));
        }
        Ok(SolutionDerivative {
            stab: StabilityOp::new(&sol.m, s)?,
            m: &sol.m,
            tol,
        })
    }

    /// `𝒢'(0)[D]`: the unique `X` with `X − M S[X] M = M D`.
    pub fn apply(&self, d: &CMat) -> Result<CMat> {
        Ok(self.stab.solve_neumann(&self.m.dot(d), self.tol)?)
    }

    /// The feedback part of the derivative: `𝒢'(0)[D] − M D`. Vanishes
    /// identically when the self-energy is zero.
    pub fn feedback(&self, d: &CMat) -> Result<CMat> {
        let full = self.apply(d)?;
        Ok(&full - &self.m.dot(d))
    }
}

/// Perturbed solution together with its convergence certificate.
#[derive(Debug, Clone)]
pub struct PerturbedSolution {
    pub g: CMat,
    /// `‖1 + D + (ζ·1 − A + S[G]) G‖_max` at the returned matrix.
    pub residual: f64,
    pub iterations: usize,
}

/// Solves the defect equation by the damped iteration
/// `G ← (1−α)G + α·(−B(G)^{-1}(1 + D))`, `B(G) = ζ·1 − A + S[G]`,
/// warm-started at `warm` (normally the unperturbed solution). The step is
/// accepted only when the residual does not increase; otherwise the damping
/// is halved and the step retried. No positivity is enforced: the perturbed
/// branch need not be the resolvent-like solution.
pub fn solve_perturbed(
    data: &DataPair,
    zeta: C64,
    d: &CMat,
    warm: &CMat,
    tol: f64,
    max_iter: usize,
) -> Result<PerturbedSolution> {
    let n = data.dim();
    if d.nrows() != n || d.ncols() != n || warm.nrows() != n || warm.ncols() != n {
        return Err(Error::BadParam("defect and warm start must match the data dimension"));
    }
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::BadParam("tol must be a positive finite number"));
    }
    if max_iter == 0 {
        return Err(Error::BadParam("max_iter must be positive"));
    }
    if !(zeta.im > 0.0) || !zeta.re.is_finite() || !zeta.im.is_finite() {
        return Err(Error::BadParam("spectral parameter must have positive imaginary part"));
    }

    let mut one_plus_d = d.clone();
    for x in 0..n {
        one_plus_d[(x, x)] += C64::new(1.0, 0.0);
    }
    let b_of = |g: &CMat| -> CMat {
        let mut b = data.self_energy().apply(g);
        let a = data.expectation().as_mat();
        b.zip_mut_with(a, |bv, &av| *bv -= av);
        for x in 0..n {
            b[(x, x)] += zeta;
        }
        b
    };
    let residual_of = |b: &CMat, g: &CMat| -> f64 {
        let mut defect = b.dot(g);
        defect.zip_mut_with(&one_plus_d, |dv, &ov| *dv += ov);
        max_norm(&defect)
    };

    let mut g = warm.clone();
    let mut b = b_of(&g);
    let mut res = residual_of(&b, &g);
    if res <= tol {
        return Ok(PerturbedSolution {
            g,
            residual: res,
            iterations: 0,
        });
    }

    let mut alpha = 1.0f64;
    for it in 1..=max_iter {
        let target = inverse(&b)?.dot(&one_plus_d).mapv(|z| -z);
        let mut accepted = false;
        while alpha >= 1e-4 {
            let mut g_next = target.mapv(|z| z * alpha);
            g_next.zip_mut_with(&g, |t, &gv| *t += gv * (1.0 - alpha));
            let b_next = b_of(&g_next);
            let res_next = residual_of(&b_next, &g_next);
            if res_next <= tol {
                return Ok(PerturbedSolution {
                    g: g_next,
                    residual: res_next,
                    iterations: it,
                });
            }
            if res_next <= res {
                g = g_next;
                b = b_next;
                res = res_next;
                alpha = (alpha * 1.25).min(1.0);
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            return Err(Error::PerturbedStalled {
                residual: res,
                iterations: it,
            });
        }
    }
    Err(Error::PerturbedStalled {
        residual: res,
        iterations: max_iter,
    })
}

/// Worst ratio `decay_norm(feedback(D)) / ‖D‖_max` over seeded Hermitian
/// probe directions. A value `≤ 1` certifies that the feedback inherits the
/// off-diagonal decay encoded in the profile.
#[derive(Debug, Clone, Copy)]
pub struct FeedbackDecay {
    pub worst_ratio: f64,
    pub probes: usize,
}

pub fn feedback_decay_report(
    deriv: &SolutionDerivative,
    metric: &IndexMetric,
    profile: &DecayProfile,
    probes: usize,
    seed: u64,
) -> Result<FeedbackDecay> {
    if probes == 0 {
        return Err(Error::BadParam("at least one probe is required"));
    }
    let n = metric.dim();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..probes {
        let mut d = CMat::zeros((n, n));
        for x in 0..n {
            d[(x, x)] = C64::new(rng.sample(StandardNormal), 0.0);
            for y in 0..x {
                let z = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
                d[(x, y)] = z;
                d[(y, x)] = z.conj();
            }
        }
        let scale = max_norm(&d);
        if scale == 0.0 {
            continue;
        }
        let fed = deriv.feedback(&d)?;
        worst = worst.max(decay_norm(&fed, metric, profile) / scale);
    }
    Ok(FeedbackDecay {
        worst_ratio: worst,
        probes,
    })
}
