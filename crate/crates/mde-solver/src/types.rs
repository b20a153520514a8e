use herm_core::{im_part, op_norm, C64, CMat, HermMatrix, IndexMetric, SuperOp};
use self_energy::SelfEnergy;

use crate::error::{Error, Result};

/// Expectation matrix plus fluctuation covariance — everything the
/// self-consistent equation `-M(z)^{-1} = z·1 - A + S[M(z)]` needs, with an
/// optional index metric carried along for decay diagnostics.
#[derive(Debug, Clone)]
pub struct DataPair {
    a: HermMatrix,
    s: SelfEnergy,
    metric: Option<IndexMetric>,
    a_norm: f64,
    s_norm: f64,
}

impl DataPair {
    pub fn new(a: HermMatrix, s: SelfEnergy, metric: Option<IndexMetric>) -> Result<Self> {
        if a.dim() != s.dim() {
            return Err(Error::DimMismatch {
                expected: a.dim(),
                got: s.dim(),
            });
        }
        if let Some(m) = &metric {
            if m.dim() != a.dim() {
                return Err(Error::DimMismatch {
                    expected: a.dim(),
                    got: m.dim(),
                });
            }
        }
        let a_norm = op_norm(a.as_mat());
        // S preserves positive semidefiniteness, so its induced norm is
        // attained at the identity; one application is exact and cheap.
        let s_norm = op_norm(&s.apply(&CMat::eye(s.dim())));
        Ok(DataPair {
            a,
            s,
            metric,
            a_norm,
            s_norm,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn expectation(&self) -> &HermMatrix {
        &self.a
    }

    pub fn self_energy(&self) -> &SelfEnergy {
        &self.s
    }

    pub fn metric(&self) -> Option<&IndexMetric> {
        self.metric.as_ref()
    }

    pub fn expectation_norm(&self) -> f64 {
        self.a_norm
    }

    pub fn self_energy_norm(&self) -> f64 {
        self.s_norm
    }

    /// Radius of the interval guaranteed to contain the spectral measure:
    /// `kappa = |A| + 2·|S|^(1/2)`.
    pub fn kappa(&self) -> f64 {
        self.a_norm + 2.0 * self.s_norm.sqrt()
    }
}

/// Point in the open upper half-plane where the equation is solved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParam {
    zeta: C64,
}

impl SpectralParam {
    pub fn new(zeta: C64) -> Result<Self> {
        if !zeta.re.is_finite() || !zeta.im.is_finite() || zeta.im <= 0.0 {
            return Err(Error::BadSpectralParam);
        }
        Ok(SpectralParam { zeta })
    }

    pub fn from_parts(tau: f64, eta: f64) -> Result<Self> {
        Self::new(C64::new(tau, eta))
    }

    pub fn value(&self) -> C64 {
        self.zeta
    }

    pub fn re(&self) -> f64 {
        self.zeta.re
    }

    pub fn im(&self) -> f64 {
        self.zeta.im
    }
}

/// Iteration controls. Defaults hold for every experiment in the workspace;
/// tighten `tol` only with a matching bump of `max_iter`.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Convergence target for the entrywise residual.
    pub tol: f64,
    /// Iteration budget; rejected steps count.
    pub max_iter: usize,
    /// Initial damping, halved whenever a step would lose positivity.
    pub alpha0: f64,
    /// Residual below which Newton corrections are attempted.
    pub newton_switch: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-11,
            max_iter: 10_000,
            alpha0: 1.0,
            newton_switch: 1e-3,
        }
    }
}

impl SolverConfig {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::BadConfig("tol must be a positive finite number"));
        }
        if self.max_iter == 0 {
            return Err(Error::BadConfig("max_iter must be positive"));
        }
        if !(self.alpha0 > 0.0 && self.alpha0 <= 1.0) {
            return Err(Error::BadConfig("alpha0 must lie in (0, 1]"));
        }
        if !(self.newton_switch > 0.0 && self.newton_switch.is_finite()) {
            return Err(Error::BadConfig("newton_switch must be positive"));
        }
        Ok(())
    }
}

/// Which route produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Damped fixed-point iteration alone.
    FixedPoint,
    /// Fixed-point iteration finished by Newton corrections.
    NewtonPolished,
    /// Fourier-mode iteration on translation-invariant data.
    Circulant,
}

/// Converged solution together with its certificate data.
#[derive(Debug, Clone)]
pub struct MdeSolution {
    pub m: CMat,
    pub zeta: C64,
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

impl MdeSolution {
    /// Re-derives the three contract guarantees from the stored matrix:
    /// the imaginary part is positive definite (up to round-off), the
    /// operator norm respects the Stieltjes bound `1/Im z`, and the recorded
    /// residual is at most `tol`.
    pub fn validate(&self, data: &DataPair, tol: f64) -> Result<()> {
        let im_min = im_part(&self.m).min_eig();
        if im_min <= -1e-12 {
            return Err(Error::BadConfig("solution lost imaginary-part positivity"));
        }
        if op_norm(&self.m) > 1.0 / self.zeta.im + tol {
            return Err(Error::BadConfig("solution violates the Stieltjes norm bound"));
        }
        let res = crate::residual::residual(data, self.zeta, &self.m);
        if res > tol {
            return Err(Error::NonConvergence {
                residual: res,
                iterations: self.iterations,
            });
        }
        Ok(())
    }

    /// Normalized spectral density `Im<M>/pi` read off at this point.
    pub fn density(&self) -> f64 {
        herm_core::avg_trace(&self.m).im / std::f64::consts::PI
    }
}

pub(crate) fn cold_start(n: usize, zeta: C64) -> CMat {
    CMat::from_diag_elem(n, -C64::new(1.0, 0.0) / zeta)
}

/// True iff the anti-Hermitian part of `m` is positive definite; every
/// accepted iterate must keep this.
pub(crate) fn im_positive(m: &CMat) -> bool {
    im_part(m).min_eig() > 0.0
}
