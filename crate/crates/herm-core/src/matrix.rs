use crate::error::{Error, Result};
use crate::{C64, CMat};

/// Exactly self-adjoint complex matrix.
///
/// The invariant `h[(x, y)] == conj(h[(y, x)])` holds bit for bit: every
/// constructor writes the upper triangle and mirrors it, and diagonal entries
/// are stored with a zero imaginary part. All entries are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct HermMatrix {
    data: CMat,
}

impl HermMatrix {
    /// Builds from a rule for the upper triangle (`x <= y`). The imaginary
    /// part of diagonal values is dropped.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        let mut data = CMat::zeros((n, n));
        for x in 0..n {
            for y in x..n {
                let v = f(x, y);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite);
                }
                if x == y {
                    data[(x, x)] = C64::new(v.re, 0.0);
                } else {
                    data[(x, y)] = v;
                    data[(y, x)] = v.conj();
                }
            }
        }
        Ok(HermMatrix { data })
    }

    /// Symmetrizes an arbitrary matrix to `(m + m*) / 2`.
    pub fn hermitize(m: &CMat) -> Result<Self> {
        let n = m.nrows();
        Self::from_upper(n, |x, y| (m[(x, y)] + m[(y, x)].conj()) * 0.5)
    }

    /// Accepts `m` as Hermitian if it deviates from its adjoint by at most
    /// `tol` entrywise, then symmetrizes exactly.
    pub fn from_matrix_checked(m: &CMat, tol: f64) -> Result<Self> {
        let dev = m
            .indexed_iter()
            .map(|((x, y), v)| (v - m[(y, x)].conj()).norm())
            .fold(0.0f64, f64::max);
        if !(dev <= 2.0 * tol) {
            return Err(Error::NotHermitian(dev));
        }
        Self::hermitize(m)
    }

    pub fn zeros(n: usize) -> Self {
        HermMatrix {
            data: CMat::zeros((n, n)),
        }
    }

    pub fn identity(n: usize) -> Self {
        HermMatrix {
            data: CMat::eye(n),
        }
    }

    pub fn from_real_diag(d: &[f64]) -> Self {
        let mut data = CMat::zeros((d.len(), d.len()));
        for (x, v) in d.iter().enumerate() {
            data[(x, x)] = C64::new(*v, 0.0);
        }
        HermMatrix { data }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn as_mat(&self) -> &CMat {
        &self.data
    }

    pub fn into_mat(self) -> CMat {
        self.data
    }

    /// Smallest eigenvalue.
    pub fn min_eig(&self) -> f64 {
        crate::linalg::eigh_values(self)
            .first()
            .copied()
            .unwrap_or(0.0)
    }

    /// True iff the smallest eigenvalue is at least `-tol`.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.min_eig() >= -tol
    }
}

impl std::ops::Deref for HermMatrix {
    type Target = CMat;
    fn deref(&self) -> &CMat {
        &self.data
    }
}

/// Conjugate transpose.
pub fn adjoint(m: &CMat) -> CMat {
    m.t().mapv(|v| v.conj())
}

/// Normalized trace `<R> = tr(R) / N`.
pub fn avg_trace(m: &CMat) -> C64 {
    let n = m.nrows() as f64;
    m.diag().sum() / C64::new(n, 0.0)
}

/// Normalized inner product `<R, T> = tr(R* T) / N`; the single inner
/// product used throughout the workspace.
pub fn inner(r: &CMat, t: &CMat) -> C64 {
    let n = r.nrows() as f64;
    r.iter()
        .zip(t.iter())
        .map(|(a, b)| a.conj() * b)
        .sum::<C64>()
        / C64::new(n, 0.0)
}

/// Norm induced by [`inner`]: `sqrt(sum |r_xy|^2 / N)`.
pub fn hs_norm(m: &CMat) -> f64 {
    let n = m.nrows() as f64;
    (m.iter().map(|v| v.norm_sqr()).sum::<f64>() / n).sqrt()
}

/// Hermitian part `(M + M*) / 2`, exactly self-adjoint.
pub fn re_part(m: &CMat) -> HermMatrix {
    HermMatrix::hermitize(m).expect("finite input")
}

/// Anti-Hermitian part `(M - M*) / (2i)`, exactly self-adjoint.
pub fn im_part(m: &CMat) -> HermMatrix {
    let n = m.nrows();
    let two_i = C64::new(0.0, 2.0);
    HermMatrix::from_upper(n, |x, y| (m[(x, y)] - m[(y, x)].conj()) / two_i)
        .expect("finite input")
}
