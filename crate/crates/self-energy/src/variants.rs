//! The self-energy operator `S[R] = E (H−A) R (H−A)` in its three shapes.

use herm_core::{avg_trace, C64, CMat, SuperOp};
use ndarray::Array2;

use crate::error::{Error, Result};
use crate::kernel::CovarianceKernel;

/// Symmetry class of the fluctuation field: real symmetric (`One`) or
/// complex Hermitian (`Two`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Beta {
    One,
    Two,
}

#[derive(Debug, Clone)]
pub enum SelfEnergy {
    /// `S[R] = c·⟨R⟩·1`.
    MeanField { dim: usize, scale: f64 },
    /// Diagonal output from an entry variance profile `s_xy`, plus the
    /// transpose exchange term in the real symmetric class:
    /// `S[R]_xy = δ_xy (1/N) Σ_u s_xu R_uu [+ (1/N) s_xy R_yx for β=1]`.
    VarianceProfile { s: Array2<f64>, beta: Beta },
    /// Banded two-channel covariance kernel.
    Kernel(CovarianceKernel),
}

impl SelfEnergy {
    pub fn mean_field(dim: usize, scale: f64) -> Self {
        SelfEnergy::MeanField { dim, scale }
    }

    pub fn variance_profile(s: Array2<f64>, beta: Beta) -> Result<Self> {
        if s.nrows() != s.ncols() {
            return Err(Error::DimMismatch {
                expected: s.nrows(),
                got: s.ncols(),
            });
        }
        for x in 0..s.nrows() {
            for y in 0..x {
                if (s[(x, y)] - s[(y, x)]).abs() > 1e-12 {
                    return Err(Error::BadKernel("variance profile must be symmetric"));
                }
            }
        }
        if s.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::BadKernel("variance profile entries must be >= 0"));
        }
        Ok(SelfEnergy::VarianceProfile { s, beta })
    }

    pub fn dim(&self) -> usize {
        match self {
            SelfEnergy::MeanField { dim, .. } => *dim,
            SelfEnergy::VarianceProfile { s, .. } => s.nrows(),
            SelfEnergy::Kernel(k) => k.dim(),
        }
    }

    pub fn apply_checked(&self, r: &CMat) -> Result<CMat> {
        if r.nrows() != self.dim() || r.ncols() != self.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                got: r.nrows(),
            });
        }
        Ok(self.apply(r))
    }
}

impl SuperOp for SelfEnergy {
    fn dim(&self) -> usize {
        self.dim()
    }

    fn apply(&self, r: &CMat) -> CMat {
        match self {
            SelfEnergy::MeanField { dim, scale } => {
                let tr = avg_trace(r) * C64::new(*scale, 0.0);
                CMat::from_diag_elem(*dim, tr)
            }
            SelfEnergy::VarianceProfile { s, beta } => {
                let n = s.nrows();
                let inv_n = 1.0 / n as f64;
                let mut out = CMat::zeros((n, n));
                for x in 0..n {
                    let mut acc = C64::new(0.0, 0.0);
                    for u in 0..n {
                        acc += r[(u, u)] * s[(x, u)];
                    }
                    out[(x, x)] = acc * inv_n;
                }
                if *beta == Beta::One {
                    for x in 0..n {
                        for y in 0..n {
                            out[(x, y)] += r[(y, x)] * (s[(x, y)] * inv_n);
                        }
                    }
                }
                out
            }
            SelfEnergy::Kernel(k) => k.apply(r),
        }
    }

    // Self-adjoint w.r.t. the normalized trace inner product: the kernel
    // symmetries checked at construction make apply its own adjoint.
    fn apply_adjoint(&self, r: &CMat) -> CMat {
        self.apply(r)
    }
}
