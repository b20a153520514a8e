//! Fourier fast path for translation-invariant data.
//!
//! When `A` is circulant and the self-energy commutes with index shifts, the
//! solution is circulant too and the equation closes on its first row: with
//! eigenvalues `m(k) = sum_d c(d) exp(+2·pi·i·k·d/N)` of the circulant with
//! first row `c`, each Fourier mode obeys
//!
//! ```text
//! -1/m(k) = z - a(k) + s(k),
//! ```
//!
//! where `s(k)` couples the modes only through the row action of the
//! self-energy. One damped update costs two FFTs plus an O(N·r^2) row
//! contraction instead of a dense inverse, and positivity of the imaginary
//! part is exactly `min_k Im m(k) > 0`.

use std::sync::Arc;

use herm_core::{C64, CMat};
use rustfft::{Fft, FftPlanner};
use self_energy::{CovarianceKernel, SelfEnergy};

use crate::error::{Error, Result};
use crate::types::{DataPair, MdeSolution, Method, SolverConfig, SpectralParam};

/// Row action of a shift-invariant self-energy: first row of `S[R]` as a
/// function of the first row of a circulant `R`.
pub(crate) enum RowAction {
    MeanField { scale: f64 },
    Kernel { k: CovarianceKernel },
}

pub(crate) struct CirculantForm {
    pub n: usize,
    /// Eigenvalues of `A`, real because `A` is Hermitian circulant.
    pub a_symbol: Vec<f64>,
    pub action: RowAction,
}

impl RowAction {
    /// `(S c)(dy)` for the first row `c` of a circulant input.
    fn apply_row(&self, c: &[C64]) -> Vec<C64> {
        let n = c.len();
        match self {
            RowAction::MeanField { scale } => {
                let mut out = vec![C64::new(0.0, 0.0); n];
                out[0] = c[0] * *scale;
                out
            }
            RowAction::Kernel { k } => {
                let r = k.range() as i64;
                let inv_n = 1.0 / n as f64;
                let at = |d: i64| c[d.rem_euclid(n as i64) as usize];
                let mut out = vec![C64::new(0.0, 0.0); n];
                // Parallel channel: diagonal sums of a circulant collapse to
                // N·c(p), cancelling the kernel's 1/N normalization.
                for dy in -r..=r {
                    let mut acc = C64::new(0.0, 0.0);
                    for p in -r..=r {
                        acc += k.table_par(p, dy) * at(p);
                    }
                    out[dy.rem_euclid(n as i64) as usize] += acc;
                }
                if k.has_cross_channel() {
                    for dy in 0..n as i64 {
                        let mut acc = C64::new(0.0, 0.0);
                        for dv in -r..=r {
                            for dq in -r..=r {
                                acc += k.table_cross(dv, dq) * at(dv + dq - dy);
                            }
                        }
                        out[dy as usize] += acc * inv_n;
                    }
                }
                out
            }
        }
    }
}

/// Detects a translation-invariant pair: `A` exactly circulant and the
/// self-energy either mean-field or an unmasked banded kernel.
pub(crate) fn circulant_form(data: &DataPair) -> Option<CirculantForm> {
    let n = data.dim();
    let a = data.expectation().as_mat();
    for x in 0..n {
        for y in 0..n {
            if a[(x, y)] != a[(0, (y + n - x) % n)] {
                return None;
            }
        }
    }
    let action = match data.self_energy() {
        SelfEnergy::MeanField { scale, .. } => RowAction::MeanField { scale: *scale },
        SelfEnergy::Kernel(k) if k.is_translation_invariant() => {
            RowAction::Kernel { k: k.clone() }
        }
        _ => return None,
    };
    let row: Vec<C64> = (0..n).map(|d| a[(0, d)]).collect();
    let a_symbol = symbol_of_row(&row).iter().map(|z| z.re).collect();
    Some(CirculantForm {
        n,
        a_symbol,
        action,
    })
}

/// Unnormalized inverse DFT: `m(k) = sum_d c(d) exp(+2·pi·i·k·d/N)` — the
/// eigenvalues of the circulant with first row `c`.
fn symbol_of_row(c: &[C64]) -> Vec<C64> {
    let mut buf = c.to_vec();
    FftPlanner::new()
        .plan_fft_inverse(c.len())
        .process(&mut buf);
    buf
}

struct ModeSpace {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl ModeSpace {
    fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        ModeSpace {
            n,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    /// First row from eigenvalues: `c = forward(m)/N`.
    fn row(&self, symbol: &[C64]) -> Vec<C64> {
        let mut buf = symbol.to_vec();
        self.forward.process(&mut buf);
        let inv_n = 1.0 / self.n as f64;
        buf.iter_mut().for_each(|v| *v *= inv_n);
        buf
    }

    /// Eigenvalues from first row.
    fn symbol(&self, row: &[C64]) -> Vec<C64> {
        let mut buf = row.to_vec();
        self.inverse.process(&mut buf);
        buf
    }
}

/// One evaluation of the mode-space equation at `symbol`.
struct ModeState {
    row: Vec<C64>,
    /// `z - a(k) + s(k)`; imaginary part at least `Im z` while the iterate
    /// stays in the upper half-plane.
    denom: Vec<C64>,
    defect: Vec<C64>,
    /// Exact entrywise residual: the defect matrix is circulant, so its
    /// entries are the forward transform of its eigenvalues — not a bound.
    res: f64,
}

fn evaluate(form: &CirculantForm, modes: &ModeSpace, z: C64, symbol: &[C64]) -> ModeState {
    let n = form.n;
    let row = modes.row(symbol);
    let s_symbol = modes.symbol(&form.action.apply_row(&row));
    let denom: Vec<C64> = (0..n)
        .map(|k| z - form.a_symbol[k] + s_symbol[k])
        .collect();
    let defect: Vec<C64> = (0..n)
        .map(|k| C64::new(1.0, 0.0) + denom[k] * symbol[k])
        .collect();
    let res = modes
        .row(&defect)
        .iter()
        .map(|v| v.norm())
        .fold(0.0, f64::max);
    ModeState {
        row,
        denom,
        defect,
        res,
    }
}

/// `W[k, j] = d s(k) / d m(j)`: the self-energy couples the modes through a
/// constant linear map, assembled once per solve from basis responses.
fn mode_coupling(form: &CirculantForm, modes: &ModeSpace) -> CMat {
    let n = form.n;
    let mut w = CMat::zeros((n, n));
    let mut e = vec![C64::new(0.0, 0.0); n];
    for j in 0..n {
        e[j] = C64::new(1.0, 0.0);
        let col = modes.symbol(&form.action.apply_row(&modes.row(&e)));
        e[j] = C64::new(0.0, 0.0);
        for k in 0..n {
            w[(k, j)] = col[k];
        }
    }
    w
}

/// Solves on the Fourier modes. Errors with [`Error::NotCirculant`] when the
/// pair has no translation-invariant form.
pub fn solve_circulant(
    data: &DataPair,
    zeta: SpectralParam,
    cfg: &SolverConfig,
    warm: Option<&CMat>,
) -> Result<MdeSolution> {
    cfg.validate()?;
    let form = circulant_form(data).ok_or(Error::NotCirculant)?;
    let n = form.n;
    let z = zeta.value();
    let modes = ModeSpace::new(n);

    let mut symbol = warm
        .and_then(|w| warm_symbol(&modes, w))
        .unwrap_or_else(|| vec![-C64::new(1.0, 0.0) / z; n]);

    let mut alpha = cfg.alpha0;
    let mut coupling: Option<CMat> = None;
    let mut newton_strikes = 0usize;
    let mut res = f64::INFINITY;

    for iter in 0..cfg.max_iter {
        let state = evaluate(&form, &modes, z, &symbol);
        res = state.res;
        if res <= cfg.tol {
            return Ok(MdeSolution {
                m: materialize(&state.row),
                zeta: z,
                residual: res,
                iterations: iter,
                method: Method::Circulant,
            });
        }
        if !res.is_finite() {
            return Err(Error::NonConvergence {
                residual: res,
                iterations: iter,
            });
        }

        // Newton on the mode vector: J = diag(denom) + diag(m)·W, a dense
        // N-dimensional solve instead of an N^2-dimensional one.
        if res < cfg.newton_switch && newton_strikes < 3 {
            let w = coupling.get_or_insert_with(|| mode_coupling(&form, &modes));
            let mut j = w.clone();
            for k in 0..n {
                for l in 0..n {
                    j[(k, l)] *= symbol[k];
                }
                j[(k, k)] += state.denom[k];
            }
            if let Ok(jinv) = herm_core::inverse(&j) {
                let cand: Vec<C64> = (0..n)
                    .map(|k| {
                        let corr: C64 = (0..n).map(|l| jinv[(k, l)] * state.defect[l]).sum();
                        symbol[k] - corr
                    })
                    .collect();
                if cand.iter().all(|v| v.im > 0.0) {
                    let cand_state = evaluate(&form, &modes, z, &cand);
                    if cand_state.res < res {
                        symbol = cand;
                        continue;
                    }
                }
            }
            newton_strikes += 1;
        }

        let cand: Vec<C64> = (0..n)
            .map(|k| symbol[k] * (1.0 - alpha) - alpha / state.denom[k])
            .collect();
        if cand.iter().all(|v| v.im > 0.0) {
            symbol = cand;
        } else {
            alpha *= 0.5;
            if alpha < crate::solve::ALPHA_FLOOR {
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

/// Projects a warm-start matrix onto its circulant part (diagonal averages)
/// and keeps it only if every mode stays in the upper half-plane.
fn warm_symbol(modes: &ModeSpace, w: &CMat) -> Option<Vec<C64>> {
    let n = modes.n;
    if w.nrows() != n || w.ncols() != n {
        return None;
    }
    let inv_n = 1.0 / n as f64;
    let mut row = vec![C64::new(0.0, 0.0); n];
    for d in 0..n {
        let mut acc = C64::new(0.0, 0.0);
        for x in 0..n {
            acc += w[(x, (x + d) % n)];
        }
        row[d] = acc * inv_n;
    }
    let symbol = modes.symbol(&row);
    symbol.iter().all(|v| v.im > 0.0).then_some(symbol)
}

fn materialize(row: &[C64]) -> CMat {
    let n = row.len();
    CMat::from_shape_fn((n, n), |(x, y)| row[(y + n - x) % n])
}
