//! Size of the linearization at a solution.
//!
//! The linear stability operator `L[R] = R − M S[R] M` governs how data
//! perturbations propagate into the solution; `‖L^{-1}‖` is the condition
//! number of the self-consistent problem. Its compact part `R ↦ M S[R] M`
//! controls everything: wherever that part is a contraction, `L^{-1}`
//! exists with norm at most `1/(1 − contraction)`. Far outside the
//! spectrum — `|ζ| ≥ 3(1 + κ)` for the a-priori bound `κ` of the data —
//! `‖M‖ ≤ 1/(|ζ| − κ)` forces the contraction below `1/4` and hence the
//! stability norm below `4/3`; [`far_regime_check`] packages exactly that
//! comparison.

use herm_core::{
    adjoint, dense_sp_norm, dense_superop, sp_norm_power, CMat, SuperOp, DENSE_SUPEROP_CUTOFF,
};
use mde_solver::{MdeSolution, StabilityOp};
use self_energy::SelfEnergy;

use crate::error::{Error, Result};

const POWER_CAP: usize = 10_000;

/// `‖R ↦ M S[R] M‖`: the compact part of the linearization. Dense singular
/// values below the superoperator cutoff, power iteration above.
pub fn contraction_norm(sol: &MdeSolution, s: &SelfEnergy, tol: f64) -> Result<f64> {
    let op = MediatedSandwich::new(&sol.m, s)?;
    if op.dim() <= DENSE_SUPEROP_CUTOFF {
        return Ok(dense_sp_norm(&dense_superop(&op)?));
    }
    Ok(sp_norm_power(&op, tol, POWER_CAP)?)
}

/// `‖L^{-1}‖` for the linear stability operator at the solution.
pub fn linear_stability_norm(sol: &MdeSolution, s: &SelfEnergy, tol: f64) -> Result<f64> {
    Ok(StabilityOp::new(&sol.m, s)?.inverse_sp_norm(tol)?)
}

/// Both norms next to the regime threshold they are compared against.
#[derive(Debug, Clone, Copy)]
pub struct FarRegimeReport {
    pub zeta_abs: f64,
    /// `3(1 + κ)`.
    pub threshold: f64,
    pub in_far_regime: bool,
    /// `‖M S[·] M‖`; at most `1/4` in the far regime.
    pub contraction: f64,
    /// `‖L^{-1}‖`; at most `4/3` whenever the contraction is at most `1/4`.
    pub stability: f64,
}

pub fn far_regime_check(
    sol: &MdeSolution,
    s: &SelfEnergy,
    kappa: f64,
    tol: f64,
) -> Result<FarRegimeReport> {
    if !(kappa >= 0.0) || !kappa.is_finite() {
        return Err(Error::BadParam("kappa must be a nonnegative finite number"));
    }
    let contraction = contraction_norm(sol, s, tol)?;
    let stability = linear_stability_norm(sol, s, tol)?;
    let zeta_abs = sol.zeta.norm();
    let threshold = 3.0 * (1.0 + kappa);
    Ok(FarRegimeReport {
        zeta_abs,
        threshold,
        in_far_regime: zeta_abs >= threshold,
        contraction,
        stability,
    })
}

/// The compact part `R ↦ M S[R] M` as a standalone map; its adjoint under
/// the normalized trace pairing is `Q ↦ S[M* Q M*]`.
struct MediatedSandwich<'a> {
    m: &'a CMat,
    m_adj: CMat,
    s: &'a SelfEnergy,
}

impl<'a> MediatedSandwich<'a> {
    fn new(m: &'a CMat, s: &'a SelfEnergy) -> Result<Self> {
        if m.nrows() != s.dim() || m.ncols() != s.dim() {
            return Err(Error::BadParam("solution and self-energy dimensions differ"));
        }
        Ok(MediatedSandwich {
            m,
            m_adj: adjoint(m),
            s,
        })
    }
}

impl SuperOp for MediatedSandwich<'_> {
    fn dim(&self) -> usize {
        self.m.nrows()
    }

    fn apply(&self, r: &CMat) -> CMat {
        self.m.dot(&self.s.apply(r)).dot(self.m)
    }

    fn apply_adjoint(&self, q: &CMat) -> CMat {
        self.s.apply(&self.m_adj.dot(q).dot(&self.m_adj))
    }
}
