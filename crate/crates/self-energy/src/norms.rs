//! Operator norms of a self-energy: the norm induced by the spectral norm
//! on matrices, and the norm induced by the normalized Hilbert–Schmidt
//! inner product.

use herm_core::{
    dense_sp_norm, dense_superop, eigh, herm_fn, op_norm, sp_norm_power, C64, CMat, HermMatrix,
    SuperOp, DENSE_SUPEROP_CUTOFF,
};

use crate::variants::SelfEnergy;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfEnergyNorms {
    pub op: f64,
    pub sp: f64,
}

/// `sup ‖T[R]‖_op / ‖R‖_op` by alternating ascent: the top singular pair of
/// `T[R]` defines a linear functional whose exact maximizer over the unit
/// operator-norm ball is the polar factor of the adjoint image. Each half step
/// maximizes the bilinear form exactly, so the value climbs monotonically.
pub fn op_norm_induced(t: &dyn SuperOp) -> f64 {
    let n = t.dim();
    let mut r = CMat::eye(n);
    let mut prev = -1.0f64;
    for _ in 0..500 {
        let img = t.apply(&r);
        // Top singular triple of img via the Hermitian square.
        let gram = herm_core::adjoint(&img).dot(&img);
        let gh = HermMatrix::hermitize(&gram).expect("operator produced non-finite entries");
        let (vals, vecs) = eigh(&gh);
        let top = vals[vals.len() - 1].max(0.0);
        let sigma = top.sqrt();
        if sigma <= f64::MIN_POSITIVE {
            return 0.0;
        }
        let v = vecs.column(vecs.ncols() - 1).to_owned();
        let u = img.dot(&v).mapv(|z| z / C64::new(sigma, 0.0));
        if (sigma - prev).abs() <= 1e-12 * sigma.max(1.0) {
            return sigma;
        }
        prev = sigma;
        // Gradient direction: adjoint image of u v*; its polar factor is the
        // exact maximizer of Re<grad, R> over ‖R‖_op ≤ 1.
        let uv = CMat::from_shape_fn((n, n), |(x, y)| u[x] * v[y].conj());
        let grad = t.apply_adjoint(&uv);
        r = polar_factor(&grad);
    }
    prev
}

/// Partial isometry from the polar decomposition `B = R (B*B)^{1/2}`,
/// extended by zero on the kernel of `B`.
fn polar_factor(b: &CMat) -> CMat {
    let gram = herm_core::adjoint(b).dot(b);
    let gh = HermMatrix::hermitize(&gram).expect("non-finite polar input");
    let peak = herm_core::eigh_values(&gh)
        .iter()
        .cloned()
        .fold(0.0, f64::max);
    if peak <= f64::MIN_POSITIVE {
        return CMat::zeros(b.dim());
    }
    let cut = peak * 1e-28;
    let inv_root = herm_fn(&gh, |s| if s > cut { 1.0 / s.sqrt() } else { 0.0 });
    b.dot(inv_root.as_mat())
}

/// Both induced norms, with the ordering `‖S‖_sp ≤ ‖S‖_op` asserted.
/// The sp norm goes through the dense superoperator below the dense cutoff
/// and power iteration above it.
pub fn self_energy_norms(s: &SelfEnergy) -> SelfEnergyNorms {
    let n = s.dim();
    let sp = if n <= DENSE_SUPEROP_CUTOFF {
        dense_sp_norm(&dense_superop(s).expect("dim is within the dense cutoff"))
    } else {
        sp_norm_power(s, 1e-10, 100_000).expect("power iteration on S*S failed to settle")
    };
    let op = op_norm_induced(s);
    assert!(
        sp <= op + 1e-9 * op.max(1.0),
        "norm ordering violated: sp={sp} op={op}"
    );
    SelfEnergyNorms { op, sp }
}

/// Russo–Dye evaluation `‖S[1]‖_op`, exact for positivity-preserving maps;
/// kept as an independent route for cross-checking `op_norm_induced`.
pub fn op_norm_positive_route(s: &SelfEnergy) -> f64 {
    op_norm(&s.apply(&CMat::eye(s.dim())))
}
