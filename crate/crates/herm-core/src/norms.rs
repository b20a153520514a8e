use crate::CMat;

/// The four matrix norms used in the estimates.
///
/// `Op` is the largest singular value, `Hs` the norm of the normalized inner
/// product `sqrt(tr(R* R) / N)`, `Max` the entrywise maximum, and `OneVeeInf`
/// the larger of the maximal column and row absolute sums. On every matrix
/// `max(Max, Hs) <= Op <= OneVeeInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixNorm {
    Op,
    Hs,
    Max,
    OneVeeInf,
}

pub fn matrix_norm(m: &CMat, kind: MatrixNorm) -> f64 {
    match kind {
        MatrixNorm::Op => crate::linalg::op_norm(m),
        MatrixNorm::Hs => crate::matrix::hs_norm(m),
        MatrixNorm::Max => max_norm(m),
        MatrixNorm::OneVeeInf => one_vee_inf_norm(m),
    }
}

/// Entrywise maximum norm.
pub fn max_norm(m: &CMat) -> f64 {
    m.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// `max(max_y sum_x |r_xy|, max_x sum_y |r_xy|)`.
pub fn one_vee_inf_norm(m: &CMat) -> f64 {
    let col = m
        .columns()
        .into_iter()
        .map(|c| c.iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let row = m
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    col.max(row)
}
