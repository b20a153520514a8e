//! Dense materialization of superoperators, the brute-force oracle for
//! spectral computations on maps of matrix space.
//!
//! Matrices are flattened row-major: `vec(R)[x*N + y] = R[(x, y)]`. The
//! matrix-unit basis is orthogonal with uniform normalized norm `1/N`, so
//! spectra and spectral norms with respect to the normalized inner product
//! coincide with the ordinary ones of the dense `N^2 x N^2` matrix; no
//! rescaling is needed.

use ndarray::Array1;

use crate::error::{Error, Result};
use crate::matrix::HermMatrix;
use crate::superop::SuperOp;
use crate::{C64, CMat, CVec};

/// Memory guard: `N^4` complex entries stay below a megabyte up to here.
pub const DENSE_SUPEROP_CUTOFF: usize = 16;

pub fn vec_mat(m: &CMat) -> CVec {
    Array1::from_iter(m.iter().copied())
}

pub fn unvec(v: &CVec, n: usize) -> CMat {
    CMat::from_shape_fn((n, n), |(x, y)| v[x * n + y])
}

/// Column `k` of the result is `vec(T[E_k])` over the matrix-unit basis.
pub fn dense_superop(op: &dyn SuperOp) -> Result<CMat> {
    let n = op.dim();
    if n > DENSE_SUPEROP_CUTOFF {
        return Err(Error::DenseCutoff {
            dim: n,
            cutoff: DENSE_SUPEROP_CUTOFF,
        });
    }
    let nn = n * n;
    let mut dense = CMat::zeros((nn, nn));
    let mut basis = CMat::zeros((n, n));
    for k in 0..nn {
        let (x, y) = (k / n, k % n);
        basis[(x, y)] = C64::new(1.0, 0.0);
        let out = op.apply(&basis);
        basis[(x, y)] = C64::new(0.0, 0.0);
        for (j, v) in out.iter().enumerate() {
            dense[(j, k)] = *v;
        }
    }
    Ok(dense)
}

/// Largest singular value of the dense form.
pub fn dense_sp_norm(dense: &CMat) -> f64 {
    crate::linalg::svd_values(dense)
        .iter()
        .copied()
        .fold(0.0, f64::max)
}

/// Full real spectrum of a self-adjoint superoperator given densely;
/// validates Hermiticity of the dense form first.
pub fn dense_spectrum_self_adjoint(dense: &CMat) -> Result<Array1<f64>> {
    let h = HermMatrix::from_matrix_checked(dense, 1e-10)?;
    Ok(crate::linalg::eigh_values(&h))
}

/// Top eigenvalue and its eigenmatrix (exactly Hermitian, normalized to unit
/// hs norm) of a self-adjoint superoperator given densely.
pub fn dense_top_eigenpair_self_adjoint(dense: &CMat) -> Result<(f64, HermMatrix)> {
    let h = HermMatrix::from_matrix_checked(dense, 1e-10)?;
    let (vals, vecs) = crate::linalg::eigh(&h);
    let top = vals.len() - 1;
    let lambda = vals[top];
    let n = (dense.nrows() as f64).sqrt().round() as usize;
    let v = vecs.column(top).to_owned();
    let mut m = unvec(&v, n);
    // An eigenmatrix of a self-adjoint cone-related operator can be chosen
    // Hermitian; rotate the global phase toward the Hermitian part first.
    let tr = m.diag().sum();
    if tr.norm() > 1e-14 {
        let phase = tr / tr.norm();
        m.mapv_inplace(|z| z / phase);
    }
    let herm = HermMatrix::hermitize(&m)?;
    let norm = crate::matrix::hs_norm(herm.as_mat());
    if norm == 0.0 {
        return Err(Error::SingularMatrix);
    }
    let scaled = herm.as_mat().mapv(|z| z / norm);
    Ok((lambda, HermMatrix::hermitize(&scaled)?))
}

/// `1 / sigma_min` of the dense form; `Err` when numerically singular.
pub fn dense_inverse_sp_norm(dense: &CMat) -> Result<f64> {
    let s = crate::linalg::svd_values(dense);
    let min = s.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min > 0.0) || !min.is_finite() {
        return Err(Error::SingularMatrix);
    }
    Ok(1.0 / min)
}
