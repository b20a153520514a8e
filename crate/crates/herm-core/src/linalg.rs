//! LAPACK-backed spectral routines and the few structural fast paths.

use ndarray::Array1;
use ndarray_linalg::{EigValsh, Eigh, InverseInto, SVD, UPLO};

use crate::error::{Error, Result};
use crate::matrix::HermMatrix;
use crate::{C64, CMat};

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and the
/// unitary of column eigenvectors, so `H = V diag(vals) V*`.
pub fn eigh(h: &HermMatrix) -> (Array1<f64>, CMat) {
    // For row-major input the backend hands back the decomposition of the
    // transpose; conjugating restores column eigenvectors of `H` itself.
    let standard = h.as_mat().as_standard_layout();
    let (vals, vecs) = standard
        .eigh(UPLO::Lower)
        .expect("LAPACK zheev failed on a finite Hermitian matrix");
    (vals, vecs.mapv(|z| z.conj()))
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn eigh_values(h: &HermMatrix) -> Array1<f64> {
    h.as_mat()
        .eigvalsh(UPLO::Lower)
        .expect("LAPACK zheev failed on a finite Hermitian matrix")
}

/// Hermitian functional calculus: applies `f` to the spectrum, keeping the
/// eigenbasis. The result is exactly symmetrized.
pub fn herm_fn(h: &HermMatrix, f: impl Fn(f64) -> f64) -> HermMatrix {
    let (vals, vecs) = eigh(h);
    let fvals = vals.mapv(&f);
    let mut scaled = vecs.clone();
    for (j, fv) in fvals.iter().enumerate() {
        scaled
            .column_mut(j)
            .mapv_inplace(|v| v * C64::new(*fv, 0.0));
    }
    let m = scaled.dot(&crate::matrix::adjoint(&vecs));
    HermMatrix::hermitize(&m).expect("functional calculus produced non-finite entries")
}

/// Singular values in descending order.
pub fn svd_values(m: &CMat) -> Array1<f64> {
    let (_, s, _) = m
        .svd(false, false)
        .expect("LAPACK zgesvd failed on a finite matrix");
    s
}

fn is_diagonal(m: &CMat) -> bool {
    m.indexed_iter()
        .all(|((x, y), v)| x == y || (v.re == 0.0 && v.im == 0.0))
}

/// Matrix inverse. Exactly diagonal matrices are inverted entrywise in
/// `O(N)`; everything else goes through LAPACK LU.
pub fn inverse(m: &CMat) -> Result<CMat> {
    if is_diagonal(m) {
        let n = m.nrows();
        let mut out = CMat::zeros((n, n));
        for x in 0..n {
            let d = m[(x, x)];
            if d.norm_sqr() == 0.0 {
                return Err(Error::SingularMatrix);
            }
            out[(x, x)] = 1.0 / d;
        }
        return Ok(out);
    }
    m.clone().inv_into().map_err(|_| Error::SingularMatrix)
}

/// Largest singular value. Dense SVD up to dimension 512; above that a power
/// iteration on `R* R` with relative tolerance `1e-10`.
pub fn op_norm(m: &CMat) -> f64 {
    let n = m.nrows().max(m.ncols());
    if n == 0 {
        return 0.0;
    }
    if n <= 512 {
        return svd_values(m).iter().copied().fold(0.0, f64::max);
    }
    op_norm_power(m, 1e-10, 100_000)
}

fn op_norm_power(m: &CMat, tol: f64, max_iter: usize) -> f64 {
    let n = m.ncols();
    // Deterministic full-support start vector; no RNG dependency here.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        (state.wrapping_mul(0x2545f4914f6cdd1d) >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let mut v = Array1::from_shape_fn(n, |_| C64::new(next(), next()));
    let norm = |w: &Array1<C64>| w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let nv = norm(&v);
    v.mapv_inplace(|z| z / nv);
    let adj = crate::matrix::adjoint(m);
    let mut lambda = 0.0f64;
    for _ in 0..max_iter {
        let mut w = adj.dot(&m.dot(&v));
        let l = norm(&w);
        if l == 0.0 {
            return 0.0;
        }
        w.mapv_inplace(|z| z / l);
        let done = (l - lambda).abs() <= tol * l.max(1.0);
        lambda = l;
        v = w;
        if done {
            break;
        }
    }
    lambda.sqrt()
}
