//! Damped fixed-point iteration with Newton finishing.
//!
//! The iteration maps `M` to `(1-a)·M + a·(-(z·1 - A + S[M])^{-1})`. Any step
//! whose result loses positivity of the imaginary part is rejected and the
//! damping `a` halved — positivity is preserved by rejection, never restored
//! by projection, so accepted iterates stay genuine upper-half-plane points.
//! Once the residual is small the quadratic phase takes over: Newton
//! corrections solve the linearized equation, whose coefficient map at the
//! solution is exactly the linear stability operator `R - M·S[R]·M`.

use herm_core::{
    dense_superop, inverse, max_norm, unvec, vec_mat, C64, CMat, FnSuperOp, SuperOp,
    DENSE_SUPEROP_CUTOFF,
};

use crate::circulant;
use crate::error::{Error, Result};
use crate::residual::shifted_inverse_target;
use crate::types::{cold_start, im_positive, DataPair, MdeSolution, Method, SolverConfig, SpectralParam};

/// Damping below which a rejected step aborts the solve; 2^-20.
pub(crate) const ALPHA_FLOOR: f64 = 9.5367431640625e-7;

/// Consecutive Newton failures tolerated before the solve stops trying.
const NEWTON_STRIKES: usize = 3;

/// Iteration cap and relative tolerance factor for the matrix-free inner
/// solves of the Newton correction.
const NEWTON_INNER_CAP: usize = 400;
const NEWTON_INNER_FACTOR: f64 = 0.1;

/// Solves the self-consistent equation at one spectral parameter, routing
/// translation-invariant data through the Fourier fast path and everything
/// else through the dense iteration.
pub fn solve_at(
    data: &DataPair,
    zeta: SpectralParam,
    cfg: &SolverConfig,
    warm: Option<&CMat>,
) -> Result<MdeSolution> {
    if circulant::circulant_form(data).is_some() {
        return circulant::solve_circulant(data, zeta, cfg, warm);
    }
    solve_dense(data, zeta, cfg, warm)
}

/// Dense-path solver; works for every data pair. Exposed so the Fourier
/// route can be cross-checked against it.
pub fn solve_dense(
    data: &DataPair,
    zeta: SpectralParam,
    cfg: &SolverConfig,
    warm: Option<&CMat>,
) -> Result<MdeSolution> {
    cfg.validate()?;
    let n = data.dim();
    let z = zeta.value();

    // A warm start only helps if it is itself an upper-half-plane point;
    // otherwise fall back to the resolvent of pure noise at height |z|.
    let mut m = match warm {
        Some(w) if w.nrows() == n && w.ncols() == n && im_positive(w) => w.clone(),
        _ => cold_start(n, z),
    };

    let mut alpha = cfg.alpha0;
    let mut newton_strikes = 0usize;
    let mut polished = false;
    let mut res = f64::INFINITY;

    for iter in 0..cfg.max_iter {
        let b = shifted_inverse_target(data, z, &m);
        let mut defect = b.dot(&m);
        for x in 0..n {
            defect[(x, x)] += C64::new(1.0, 0.0);
        }
        res = max_norm(&defect);
        if res <= cfg.tol {
            return Ok(MdeSolution {
                m,
                zeta: z,
                residual: res,
                iterations: iter,
                method: if polished {
                    Method::NewtonPolished
                } else {
                    Method::FixedPoint
                },
            });
        }
        if !res.is_finite() {
            return Err(Error::NonConvergence {
                residual: res,
                iterations: iter,
            });
        }

        let binv = inverse(&b)?;

        if res < cfg.newton_switch && newton_strikes < NEWTON_STRIKES {
            if let Some(delta) = newton_correction(data, &binv, &m, &defect, cfg) {
                let cand = &m + &delta;
                let cand_res = crate::residual::residual(data, z, &cand);
                if cand_res < res && im_positive(&cand) {
                    m = cand;
                    polished = true;
                    continue;
                }
            }
            newton_strikes += 1;
        }

        let target = binv.mapv(|v| -v);
        let cand = if alpha == 1.0 {
            target
        } else {
            let ca = C64::new(alpha, 0.0);
            let cb = C64::new(1.0 - alpha, 0.0);
            m.mapv(|v| v * cb) + target.mapv(|v| v * ca)
        };
        if im_positive(&cand) {
            m = cand;
        } else {
            alpha *= 0.5;
            if alpha < ALPHA_FLOOR {
                return Err(Error::DampingUnderflow {
                    alpha,
                    residual: res,
                });
            }
        }
    }

    Err(Error::NonConvergence {
        residual: res,
        iterations: cfg.max_iter,
    })
}

/// One Newton correction: solves `D + B^{-1}·S[D]·M = -B^{-1}·defect` for
/// `D`, densely below the superoperator cutoff and by fixed-point iteration
/// above it. Returns `None` when the linear solve fails or stalls; the outer
/// loop then falls back to a damped step.
fn newton_correction(
    data: &DataPair,
    binv: &CMat,
    m: &CMat,
    defect: &CMat,
    cfg: &SolverConfig,
) -> Option<CMat> {
    let n = data.dim();
    let rhs = binv.dot(defect).mapv(|v| -v);
    let s = data.self_energy();

    if n <= DENSE_SUPEROP_CUTOFF {
        let op = FnSuperOp {
            n,
            f: |d: &CMat| d + &binv.dot(&s.apply(d)).dot(m),
            f_adj: |q: &CMat| {
                let binv_adj = herm_core::adjoint(binv);
                let m_adj = herm_core::adjoint(m);
                q + &s.apply(&binv_adj.dot(q).dot(&m_adj))
            },
        };
        let dense = dense_superop(&op).ok()?;
        let sol = inverse(&dense).ok()?.dot(&vec_mat(&rhs));
        return Some(unvec(&sol, n));
    }

    // Contraction form D <- rhs - B^{-1}·S[D]·M; near the solution the
    // iteration matrix is the compact part of the stability operator.
    let tol = NEWTON_INNER_FACTOR * cfg.tol;
    let mut d = rhs.clone();
    for _ in 0..NEWTON_INNER_CAP {
        let next = &rhs - &binv.dot(&s.apply(&d)).dot(m);
        let change = max_norm(&(&next - &d));
        d = next;
        if change <= tol {
            return Some(d);
        }
        if !change.is_finite() || change > 1e6 {
            return None;
        }
    }
    None
}
