//! Inverting a unitary sandwich shifted by a gapped self-adjoint map.
//!
//! For a unitary `U`, the sandwich `C_U[R] = U R U` is a superoperator of
//! norm one; for a self-adjoint `T` with `‖T‖ ≤ 1`, a simple top eigenvalue
//! and spectral gap `θ` (all other eigenvalues in `[−‖T‖ + θ, ‖T‖ − θ]`),
//! the difference `C_U − T` stays invertible as long as the rotation does
//! not line up with the top eigenmatrix, and quantitatively
//!
//! ```text
//!     ‖(C_U − T)^{-1}‖  ≲  (1/θ) · |1 − ‖T‖ ⟨T̂, C_U[T̂]⟩|^{-1},
//! ```
//!
//! with `T̂` the hs-normalized top eigenmatrix. The check below computes
//! both sides densely and reports their ratio — the implied constant — so
//! experiments can record how sharp the estimate runs in practice. A
//! genuinely singular difference is reported as an infinite left side, not
//! an error: it is the boundary case the estimate is about.

use herm_core::{
    adjoint, dense_inverse_sp_norm, dense_sp_norm, dense_superop,
    dense_top_eigenpair_self_adjoint, inner, max_norm, C64, CMat, Sandwich, SuperOp,
    DENSE_SUPEROP_CUTOFF,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct RotationReport {
    /// `‖(C_U − T)^{-1}‖`; infinite when the difference is singular.
    pub lhs: f64,
    /// `(1/θ) · |1 − ‖T‖ ⟨T̂, C_U[T̂]⟩|^{-1}` — the bound with its implied
    /// constant stripped off.
    pub rhs_without_constant: f64,
    /// `lhs / rhs_without_constant`: the constant this instance would need.
    pub ratio: f64,
    pub singular: bool,
    pub sp_norm: f64,
    /// `⟨T̂, U T̂ U⟩`, the alignment of the rotation with the top eigenmatrix.
    pub overlap: C64,
}

pub fn rotation_inversion_bound(
    u: &CMat,
    t: &dyn SuperOp,
    theta: f64,
) -> Result<RotationReport> {
    let n = t.dim();
    if n > DENSE_SUPEROP_CUTOFF {
        return Err(Error::TooLarge {
            got: n,
            cutoff: DENSE_SUPEROP_CUTOFF,
        });
    }
    if u.nrows() != n || u.ncols() != n {
        return Err(Error::BadParam("rotation factor dimension mismatch"));
    }
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::BadParam("gap must be positive and finite"));
    }
    let mut uu = adjoint(u).dot(u);
    for x in 0..n {
        uu[(x, x)] -= C64::new(1.0, 0.0);
    }
    if max_norm(&uu) > 1e-8 {
        return Err(Error::BadParam("rotation factor must be unitary"));
    }

    let dense_t = dense_superop(t)?;
    let dense_u = dense_superop(&Sandwich::new(u.clone()))?;
    let diff = &dense_u - &dense_t;
    let (lhs, singular) = match dense_inverse_sp_norm(&diff) {
        Ok(v) => (v, false),
        Err(herm_core::Error::SingularMatrix) => (f64::INFINITY, true),
        Err(e) => return Err(e.into()),
    };

    let sp_norm = dense_sp_norm(&dense_t);
    let (_, t_mat) = dense_top_eigenpair_self_adjoint(&dense_t)?;
    let overlap = inner(t_mat.as_mat(), &u.dot(t_mat.as_mat()).dot(u));
    let margin = (C64::new(1.0, 0.0) - overlap * sp_norm).norm();
    let rhs_without_constant = if margin == 0.0 {
        f64::INFINITY
    } else {
        1.0 / (theta * margin)
    };
    let ratio = if singular {
        f64::INFINITY
    } else if rhs_without_constant.is_infinite() {
        0.0
    } else {
        lhs / rhs_without_constant
    };

    Ok(RotationReport {
        lhs,
        rhs_without_constant,
        ratio,
        singular,
        sp_norm,
        overlap,
    })
}
