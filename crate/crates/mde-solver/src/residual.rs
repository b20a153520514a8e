use herm_core::{max_norm, C64, CMat, SuperOp};

use crate::types::DataPair;

/// `z·1 - A + S[M]`, the matrix whose negative inverse the fixed point maps
/// `M` to.
pub(crate) fn shifted_inverse_target(data: &DataPair, zeta: C64, m: &CMat) -> CMat {
    let n = data.dim();
    let mut b = data.self_energy().apply(m);
    let a = data.expectation().as_mat();
    for x in 0..n {
        for y in 0..n {
            b[(x, y)] -= a[(x, y)];
        }
        b[(x, x)] += zeta;
    }
    b
}

/// Defect matrix `1 + (z·1 - A + S[M])·M`; identically zero at a solution.
///
/// Panics when `m` does not match the data dimension.
pub fn residual_matrix(data: &DataPair, zeta: C64, m: &CMat) -> CMat {
    assert_eq!(m.nrows(), data.dim(), "probe matrix dimension mismatch");
    assert_eq!(m.ncols(), data.dim(), "probe matrix dimension mismatch");
    let b = shifted_inverse_target(data, zeta, m);
    let mut r = b.dot(m);
    for x in 0..data.dim() {
        r[(x, x)] += C64::new(1.0, 0.0);
    }
    r
}

/// Entrywise magnitude of the defect; the convergence measure used
/// throughout the workspace.
pub fn residual(data: &DataPair, zeta: C64, m: &CMat) -> f64 {
    max_norm(&residual_matrix(data, zeta, m))
}
