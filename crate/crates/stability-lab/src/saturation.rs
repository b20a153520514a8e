//! Balanced polar form of a solution and its saturated self-energy operator.
//!
//! Let `M` solve the self-consistent equation at a spectral parameter with
//! positive imaginary part, so `Im M ≻ 0`. With
//!
//! ```text
//!     Q = (Im M)^{1/2},   X = Q^{-1} (Re M) Q^{-1},
//!     W = (1 + X²)^{1/4}, U = (X − i·1) W^{-2},
//! ```
//!
//! the matrix `U` is unitary and the solution factors as the balanced polar
//! form `M = Q W U* W Q`. Conjugating the self-energy through the half
//! `P = Q W` produces the saturated operator
//!
//! ```text
//!     F[R] = P* S[P R P*] P,
//! ```
//!
//! which is self-adjoint for the normalized trace pairing and maps positive
//! semidefinite matrices to positive semidefinite matrices, so its spectral
//! norm is a Perron eigenvalue attained on a positive semidefinite
//! eigenmatrix. Rewriting the imaginary part of the defining equation in
//! these variables yields the exact balance
//!
//! ```text
//!     W^{-2} = Im ζ · W (Im M) W + F[W^{-2}],
//! ```
//!
//! which forces the spectral radius of `F` strictly below one whenever
//! `Im ζ > 0` and quantifies how far below: pairing the balance with the
//! Perron eigenmatrix turns it into a closed expression for the radius.

use herm_core::{
    adjoint, dense_spectrum_self_adjoint, dense_superop, eigh, herm_fn, hs_norm, inner, max_norm,
    C64, CMat, HermMatrix, SuperOp, DENSE_SUPEROP_CUTOFF,
};
use mde_solver::MdeSolution;
use ndarray::Array1;
use self_energy::SelfEnergy;

use crate::error::{Error, Result};

/// Solutions whose imaginary part has an eigenvalue below this are rejected:
/// the factorization would divide by a vanishing direction.
pub const IM_FLOOR: f64 = 1e-10;

/// Iteration budget for the Perron eigenpair.
pub const PERRON_CAP: usize = 100_000;

const PERRON_TOL: f64 = 1e-13;
const DEFLATED_CAP: usize = 10_000;

/// Balanced polar data of one solution, with the saturated operator's
/// Perron eigenpair and spectral gap.
#[derive(Debug, Clone)]
pub struct Saturation {
    m: CMat,
    zeta: C64,
    s: SelfEnergy,
    w: HermMatrix,
    w_inv2: HermMatrix,
    u: CMat,
    p: CMat,
    p_adj: CMat,
    sp_radius: f64,
    gap: f64,
    f_mat: HermMatrix,
    perron_iterations: usize,
}

/// Factors the solution and resolves the Perron data of `F`.
///
/// The spectral radius and eigenmatrix always come from the projected power
/// iteration, which keeps the iterate positive semidefinite by construction.
/// The gap to the rest of the spectrum is read off the dense spectrum below
/// the superoperator cutoff and estimated by a deflated iteration above it.
pub fn compute_saturation(sol: &MdeSolution, s: &SelfEnergy) -> Result<Saturation> {
    let n = sol.m.nrows();
    if n != s.dim() {
        return Err(Error::BadParam("solution and self-energy dimensions differ"));
    }

    let im = herm_core::im_part(&sol.m);
    let min_eig = im.min_eig();
    if min_eig < IM_FLOOR {
        return Err(Error::IllConditioned {
            min_eig,
            floor: IM_FLOOR,
        });
    }

    let q = herm_fn(&im, f64::sqrt);
    let q_inv = herm_fn(&im, |l| 1.0 / l.sqrt());
    let re = herm_core::re_part(&sol.m);
    let x = HermMatrix::hermitize(&q_inv.as_mat().dot(re.as_mat()).dot(q_inv.as_mat()))?;

    // One spectral decomposition of X feeds all three derived factors, so
    // they share an eigenbasis exactly, not just up to degeneracies.
    let (xvals, xvecs) = eigh(&x);
    let w = spectral_real(&xvals, &xvecs, |l| (1.0 + l * l).powf(0.25))?;
    let w_inv2 = spectral_real(&xvals, &xvecs, |l| 1.0 / (1.0 + l * l).sqrt())?;
    let u = spectral_complex(&xvals, &xvecs, |l| {
        let r = (1.0 + l * l).sqrt();
        C64::new(l / r, -1.0 / r)
    });

    let p = q.as_mat().dot(w.as_mat());
    let p_adj = adjoint(&p);

    let fop = SaturatedOp {
        p: &p,
        p_adj: &p_adj,
        s,
    };
    let (sp_radius, f_mat, perron_iterations) = perron(&fop)?;

    let gap = if sp_radius == 0.0 {
        0.0
    } else if n <= DENSE_SUPEROP_CUTOFF {
        let spectrum = dense_spectrum_self_adjoint(&dense_superop(&fop)?)?;
        let len = spectrum.len();
        let second_abs = if len < 2 {
            0.0
        } else {
            spectrum[0].abs().max(spectrum[len - 2].abs())
        };
        1.0 - second_abs / sp_radius
    } else {
        1.0 - deflated_second_abs(&fop, sp_radius, &f_mat)? / sp_radius
    };

    Ok(Saturation {
        m: sol.m.clone(),
        zeta: sol.zeta,
        s: s.clone(),
        w,
        w_inv2,
        u,
        p,
        p_adj,
        sp_radius,
        gap,
        f_mat,
        perron_iterations,
    })
}

impl Saturation {
    pub fn dim(&self) -> usize {
        self.p.nrows()
    }

    pub fn zeta(&self) -> C64 {
        self.zeta
    }

    /// The weight `W = (1 + X²)^{1/4}`; always `⪰ 1`.
    pub fn w(&self) -> &HermMatrix {
        &self.w
    }

    /// `W^{-2}`, the matrix whose balance equation pins the spectral radius.
    pub fn w_inv2(&self) -> &HermMatrix {
        &self.w_inv2
    }

    /// The unitary phase of the balanced polar form.
    pub fn unitary(&self) -> &CMat {
        &self.u
    }

    /// Perron eigenmatrix of `F`: positive semidefinite, unit hs norm.
    pub fn eigenmatrix(&self) -> &HermMatrix {
        &self.f_mat
    }

    /// Spectral radius of `F`; equals its spectral norm by self-adjointness.
    pub fn sp_radius(&self) -> f64 {
        self.sp_radius
    }

    /// Relative gap `1 − |λ₂|/λ₁` of the saturated operator's spectrum.
    pub fn gap(&self) -> f64 {
        self.gap
    }

    pub fn perron_iterations(&self) -> usize {
        self.perron_iterations
    }

    /// `W (Im M) W`, the middle term of the balance equation. Equals `P*·P`.
    pub fn weighted_imaginary(&self) -> CMat {
        self.p_adj.dot(&self.p)
    }

    /// `‖M − P U* P*‖_max`: how exactly the stored factors reproduce `M`.
    pub fn polar_residual(&self) -> f64 {
        let rebuilt = self.p.dot(&adjoint(&self.u)).dot(&self.p_adj);
        max_norm(&(&self.m - &rebuilt))
    }

    /// `‖U*U − 1‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        let mut uu = adjoint(&self.u).dot(&self.u);
        for x in 0..uu.nrows() {
            uu[(x, x)] -= C64::new(1.0, 0.0);
        }
        max_norm(&uu)
    }

    /// `‖W^{-2} − Im ζ · W (Im M) W − F[W^{-2}]‖_max`: the balance equation,
    /// evaluated on the stored factors. Zero at an exact solution.
    pub fn identity_residual(&self) -> f64 {
        let mut defect = self.w_inv2.as_mat().clone();
        let weighted = self.weighted_imaginary();
        let im_zeta = self.zeta.im;
        defect.zip_mut_with(&weighted, |d, &wv| *d -= wv * im_zeta);
        let fed = self.apply(self.w_inv2.as_mat());
        defect.zip_mut_with(&fed, |d, &fv| *d -= fv);
        max_norm(&defect)
    }
}

impl SuperOp for Saturation {
    fn dim(&self) -> usize {
        self.p.nrows()
    }

    fn apply(&self, r: &CMat) -> CMat {
        apply_saturated(&self.p, &self.p_adj, &self.s, r)
    }

    // F = A*·S·A for A[R] = P R P*, and S is self-adjoint.
    fn apply_adjoint(&self, r: &CMat) -> CMat {
        self.apply(r)
    }
}

/// Borrowed view used during construction, before the owning struct exists.
struct SaturatedOp<'a> {
    p: &'a CMat,
    p_adj: &'a CMat,
    s: &'a SelfEnergy,
}

impl SuperOp for SaturatedOp<'_> {
    fn dim(&self) -> usize {
        self.p.nrows()
    }

    fn apply(&self, r: &CMat) -> CMat {
        apply_saturated(self.p, self.p_adj, self.s, r)
    }

    fn apply_adjoint(&self, r: &CMat) -> CMat {
        self.apply(r)
    }
}

fn apply_saturated(p: &CMat, p_adj: &CMat, s: &SelfEnergy, r: &CMat) -> CMat {
    let conjugated = p.dot(r).dot(p_adj);
    p_adj.dot(&s.apply(&conjugated)).dot(p)
}

fn spectral_real(
    vals: &Array1<f64>,
    vecs: &CMat,
    f: impl Fn(f64) -> f64,
) -> Result<HermMatrix> {
    let mut scaled = vecs.clone();
    for (j, &l) in vals.iter().enumerate() {
        let fv = f(l);
        scaled.column_mut(j).mapv_inplace(|z| z * fv);
    }
    Ok(HermMatrix::hermitize(&scaled.dot(&adjoint(vecs)))?)
}

fn spectral_complex(vals: &Array1<f64>, vecs: &CMat, f: impl Fn(f64) -> C64) -> CMat {
    let mut scaled = vecs.clone();
    for (j, &l) in vals.iter().enumerate() {
        let fv = f(l);
        scaled.column_mut(j).mapv_inplace(|z| z * fv);
    }
    scaled.dot(&adjoint(vecs))
}

/// Projected power iteration for the Perron pair of a positivity-preserving
/// self-adjoint operator. Starts from the normalized identity and clips the
/// iterate's spectrum at zero each step, so the limit is positive
/// semidefinite by construction; the returned radius is the hs norm of the
/// image of the converged eigenmatrix, which is second-order accurate.
fn perron(f: &dyn SuperOp) -> Result<(f64, HermMatrix, usize)> {
    let n = f.dim();
    // hs_norm(identity) = 1 under the normalized inner product.
    let mut v = HermMatrix::identity(n);
    let mut lambda = 0.0f64;
    let mut change = f64::INFINITY;
    for it in 1..=PERRON_CAP {
        let image = psd_clip(&f.apply(v.as_mat()))?;
        let l = hs_norm(image.as_mat());
        if l < 1e-300 {
            // F annihilates the positive cone: zero operator on it.
            return Ok((0.0, HermMatrix::identity(n), it));
        }
        let next = HermMatrix::hermitize(&image.as_mat().mapv(|z| z / l))?;
        change = hs_norm(&(next.as_mat() - v.as_mat()));
        let radius_settled = (l - lambda).abs() <= PERRON_TOL * l.max(1.0);
        v = next;
        lambda = l;
        if change <= PERRON_TOL && radius_settled {
            return Ok((lambda, v, it));
        }
    }
    Err(Error::PerronStalled {
        iterations: PERRON_CAP,
        change,
    })
}

fn psd_clip(m: &CMat) -> Result<HermMatrix> {
    let h = HermMatrix::hermitize(m)?;
    Ok(herm_fn(&h, |l| l.max(0.0)))
}

/// Estimates the second-largest absolute eigenvalue by power iteration on
/// the complement of the Perron eigenmatrix; informational above the dense
/// cutoff, so a slow settle returns the best running estimate.
fn deflated_second_abs(f: &dyn SuperOp, lambda: f64, f_mat: &HermMatrix) -> Result<f64> {
    let n = f.dim();
    let deflate = |h: &CMat| -> Result<HermMatrix> {
        let c = inner(f_mat.as_mat(), h).re;
        let mut out = h.clone();
        out.zip_mut_with(f_mat.as_mat(), |o, &fv| *o -= fv * c);
        Ok(HermMatrix::hermitize(&out)?)
    };

    let start = CMat::from_shape_fn((n, n), |(x, y)| {
        C64::new(((3 * x + 5 * y + 1) as f64).sin(), ((2 * x) as f64 - (7 * y) as f64).cos())
    });
    let mut v = deflate(&HermMatrix::hermitize(&start)?.into_mat())?;
    let nv = hs_norm(v.as_mat());
    if nv < 1e-300 {
        return Ok(0.0);
    }
    v = HermMatrix::hermitize(&v.as_mat().mapv(|z| z / nv))?;

    let mut rate = 0.0f64;
    for _ in 0..DEFLATED_CAP {
        let image = deflate(&f.apply(v.as_mat()))?;
        let r = hs_norm(image.as_mat());
        if r < 1e-300 {
            return Ok(0.0);
        }
        let next = HermMatrix::hermitize(&image.as_mat().mapv(|z| z / r))?;
        let settled = (r - rate).abs() <= 1e-10 * r.max(1.0);
        v = next;
        rate = r;
        if settled {
            break;
        }
    }
    Ok(rate.min(lambda))
}
