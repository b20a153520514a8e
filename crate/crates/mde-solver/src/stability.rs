//! The linear stability operator `L[R] = R - M·S[R]·M`.
//!
//! `L` is the Jacobian of the defining map at a solution: perturbing the
//! data perturbs the solution by `L^{-1}` of the induced forcing, so the
//! size of `L^{-1}` is the condition number of the whole self-consistent
//! problem. Its adjoint under the normalized trace pairing is
//! `Q - S[M*·Q·M*]`, with the self-energy's own self-adjointness baked in.

use herm_core::{
    adjoint, dense_inverse_sp_norm, dense_superop, hs_norm, max_norm, svd_values, CMat, SuperOp,
    DENSE_SUPEROP_CUTOFF,
};
use self_energy::SelfEnergy;

use crate::error::{Error, Result};

/// Iteration caps for the matrix-free inverse routes.
const NEUMANN_CAP: usize = 20_000;
const POWER_CAP: usize = 500;

pub struct StabilityOp<'a> {
    m: &'a CMat,
    m_adj: CMat,
    s: &'a SelfEnergy,
}

impl<'a> StabilityOp<'a> {
    pub fn new(m: &'a CMat, s: &'a SelfEnergy) -> Result<Self> {
        if m.nrows() != s.dim() || m.ncols() != s.dim() {
            return Err(Error::DimMismatch {
                expected: s.dim(),
                got: m.nrows(),
            });
        }
        Ok(StabilityOp {
            m,
            m_adj: adjoint(m),
            s,
        })
    }

    /// The compact part `R -> M·S[R]·M` whose spectral radius below one makes
    /// the Neumann routes converge.
    fn sandwich_part(&self, r: &CMat) -> CMat {
        self.m.dot(&self.s.apply(r)).dot(self.m)
    }

    fn sandwich_part_adjoint(&self, q: &CMat) -> CMat {
        self.s.apply(&self.m_adj.dot(q).dot(&self.m_adj))
    }

    /// Solves `L[X] = rhs` by the Neumann iteration `X <- rhs + M·S[X]·M`.
    /// Converges exactly when the compact part is a spectral contraction;
    /// stalls are reported, never silently truncated.
    pub fn solve_neumann(&self, rhs: &CMat, tol: f64) -> Result<CMat> {
        self.neumann_impl(rhs, tol, false)
    }

    /// Same iteration for the adjoint `L*[X] = rhs`.
    pub fn solve_neumann_adjoint(&self, rhs: &CMat, tol: f64) -> Result<CMat> {
        self.neumann_impl(rhs, tol, true)
    }

    fn neumann_impl(&self, rhs: &CMat, tol: f64, adj: bool) -> Result<CMat> {
        let mut x = rhs.clone();
        let mut last_change = f64::INFINITY;
        for iter in 0..NEUMANN_CAP {
            let next = if adj {
                rhs + &self.sandwich_part_adjoint(&x)
            } else {
                rhs + &self.sandwich_part(&x)
            };
            last_change = max_norm(&(&next - &x));
            x = next;
            if last_change <= tol {
                return Ok(x);
            }
            if !last_change.is_finite() || last_change > 1e9 {
                return Err(Error::NonConvergence {
                    residual: last_change,
                    iterations: iter,
                });
            }
        }
        Err(Error::NonConvergence {
            residual: last_change,
            iterations: NEUMANN_CAP,
        })
    }

    /// Spectral norm of `L^{-1}` — the linear stability size. Dense singular
    /// values below the superoperator cutoff; above it, the matrix-free
    /// power route.
    pub fn inverse_sp_norm(&self, tol: f64) -> Result<f64> {
        if self.m.nrows() <= DENSE_SUPEROP_CUTOFF {
            let dense = dense_superop(self)?;
            return Ok(dense_inverse_sp_norm(&dense)?);
        }
        self.inverse_sp_norm_iterative(tol)
    }

    /// Power iteration on `L^{-1}·L^{-*}` with Neumann inner solves; works at
    /// any dimension and cross-checks the dense route below the cutoff.
    pub fn inverse_sp_norm_iterative(&self, tol: f64) -> Result<f64> {
        let n = self.m.nrows();
        let inner_tol = (tol * 1e-3).max(1e-14);
        let mut v = CMat::from_shape_fn((n, n), |(x, y)| {
            herm_core::C64::new(
                1.0 + ((2 * x + 5 * y) as f64).sin() * 0.5,
                ((3 * x + 7 * y + 1) as f64).cos() * 0.5,
            )
        });
        let nv = hs_norm(&v);
        v.mapv_inplace(|z| z / nv);
        let mut lambda = 0.0f64;
        for _ in 0..POWER_CAP {
            let y = self.solve_neumann_adjoint(&v, inner_tol)?;
            let mut w = self.solve_neumann(&y, inner_tol)?;
            let l = hs_norm(&w);
            if l == 0.0 {
                return Ok(0.0);
            }
            w.mapv_inplace(|z| z / l);
            if (l - lambda).abs() <= tol * l.max(1.0) {
                return Ok(l.sqrt());
            }
            lambda = l;
            v = w;
        }
        Err(Error::NonConvergence {
            residual: lambda.sqrt(),
            iterations: POWER_CAP,
        })
    }

    /// Smallest singular value, the direct invertibility margin: exact
    /// singular values densely, reciprocal of [`Self::inverse_sp_norm`]
    /// above the cutoff.
    pub fn smallest_singular(&self, tol: f64) -> Result<f64> {
        let n = self.m.nrows();
        if n <= DENSE_SUPEROP_CUTOFF {
            let dense = dense_superop(self)?;
            let s = svd_values(&dense);
            return Ok(s.iter().copied().fold(f64::INFINITY, f64::min));
        }
        Ok(1.0 / self.inverse_sp_norm(tol)?)
    }
}

impl SuperOp for StabilityOp<'_> {
    fn dim(&self) -> usize {
        self.m.nrows()
    }

    fn apply(&self, r: &CMat) -> CMat {
        r - &self.sandwich_part(r)
    }

    fn apply_adjoint(&self, q: &CMat) -> CMat {
        q - &self.sandwich_part_adjoint(q)
    }
}
