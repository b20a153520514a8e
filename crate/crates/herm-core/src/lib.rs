//! Complex Hermitian matrix algebra for self-consistent resolvent analysis.
//!
//! Everything downstream works on the space of complex `N x N` matrices
//! equipped with the normalized inner product `<R, T> = tr(R* T) / N`. This
//! crate provides the carrier types (exactly Hermitian matrices, index
//! pseudometrics, decay profiles), the four matrix norms used in estimates,
//! linear maps on matrix space (sandwiching, conjugation) together with a
//! dense materialization used as a brute-force oracle, and Hermitian
//! functional calculus backed by LAPACK.

// Link the system BLAS; `ndarray`'s `blas` feature routes complex matrix
// products through it and `ndarray-linalg` supplies LAPACK drivers.
extern crate blas_src;

mod decay;
mod dense;
mod error;
mod linalg;
mod matrix;
mod metric;
mod norms;
mod superop;

pub use decay::{decay_norm, DecayProfile, DEFAULT_NU_MAX};
pub use dense::{
    dense_inverse_sp_norm, dense_sp_norm, dense_spectrum_self_adjoint, dense_superop,
    dense_top_eigenpair_self_adjoint, unvec, vec_mat, DENSE_SUPEROP_CUTOFF,
};
pub use error::{Error, Result};
pub use linalg::{eigh, eigh_values, herm_fn, inverse, op_norm, svd_values};
pub use matrix::{adjoint, avg_trace, hs_norm, im_part, inner, re_part, HermMatrix};
pub use metric::IndexMetric;
pub use norms::{matrix_norm, max_norm, one_vee_inf_norm, MatrixNorm};
pub use superop::{
    probe_adjoint_consistency, sp_norm_power, ConjSandwich, FnSuperOp, IdOp, Sandwich, Scaled,
    SuperOp,
};

pub type C64 = num_complex::Complex<f64>;
pub type CMat = ndarray::Array2<C64>;
pub type CVec = ndarray::Array1<C64>;

/// Imaginary unit, handy for spectral parameters.
pub const I: C64 = C64::new(0.0, 1.0);
