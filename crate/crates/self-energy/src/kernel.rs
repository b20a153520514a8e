//! Finite-range covariance kernels for correlated Hermitian ensembles.
//!
//! A kernel evaluates `kappa(x,u;v,y) = E[w_xu w_vy]` for the fluctuation
//! field `W`. Correlations live in two banded channels, mirroring the two
//! ways a pair of Hermitian entries can line up:
//!
//! * parallel: `(v,y)` near `(u,x)` — stored as `par(v−u, y−x)`;
//! * crossed:  `(v,y)` near `(x,u)` — stored as `cross(v−x, y−u)`.
//!
//! Offsets wrap around the circle and are supported in `[−r, r]`. The
//! mean-field kernel is `par(0,0) = c`; adding `cross(0,0)` gives the real
//! symmetric diagonal enhancement; moving-average filters of i.i.d. fields
//! fill whole bands. An optional per-site mask `m` sends
//! `kappa ↦ m_x m_u m_v m_y · kappa`, modelling site-dependent variance
//! (including deterministic zero rows).

use herm_core::{C64, CMat};
use ndarray::Array2;

use crate::error::{Error, Result};
use crate::variants::Beta;

/// Moving-average filter taps on the torus; the kernel it induces is the
/// tap autocorrelation, so positive semidefiniteness holds by construction.
#[derive(Debug, Clone)]
pub struct FilterTaps {
    half_width: usize,
    taps: Array2<f64>,
}

impl FilterTaps {
    /// Taps on the `(2L+1)²` block, `taps[(j+L, k+L)]`; normalized so the
    /// squared sum is 1 (unit entry variance for the filtered field).
    pub fn new(half_width: usize, taps: Array2<f64>) -> Result<Self> {
        let w = 2 * half_width + 1;
        if taps.nrows() != w || taps.ncols() != w {
            return Err(Error::BadTaps("tap block must be (2L+1) x (2L+1)"));
        }
        if taps.iter().any(|t| !t.is_finite()) {
            return Err(Error::BadTaps("non-finite tap"));
        }
        let ss: f64 = taps.iter().map(|t| t * t).sum();
        if ss <= 0.0 {
            return Err(Error::BadTaps("taps are identically zero"));
        }
        let taps = taps.mapv(|t| t / ss.sqrt());
        Ok(FilterTaps { half_width, taps })
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn taps(&self) -> &Array2<f64> {
        &self.taps
    }

    /// Autocorrelation `a(p,q) = Σ_jk t_jk t_{j+p,k+q}`, supported on
    /// `|p|,|q| ≤ 2L`.
    pub fn autocorrelation(&self, p: i64, q: i64) -> f64 {
        let l = self.half_width as i64;
        let mut acc = 0.0;
        for j in -l..=l {
            for k in -l..=l {
                let (jp, kq) = (j + p, k + q);
                if jp.abs() <= l && kq.abs() <= l {
                    acc += self.taps[((j + l) as usize, (k + l) as usize)]
                        * self.taps[((jp + l) as usize, (kq + l) as usize)];
                }
            }
        }
        acc
    }
}

/// How a kernel's fluctuation field is realized by a sampler.
#[derive(Debug, Clone)]
pub enum KernelOrigin {
    /// Independent entries (upper triangle), entry variance `scale`.
    IidEntries { scale: f64 },
    /// Moving-average filter of an i.i.d. field, plus an independent
    /// mean-field component of weight `floor`.
    Filter { taps: FilterTaps, floor: f64 },
    /// No sampling shortcut; draws require factoring the full covariance.
    General,
}

#[derive(Debug, Clone)]
pub struct CovarianceKernel {
    n: usize,
    beta: Beta,
    range: usize,
    /// `par[(p+r, dy+r)]` with `p = v−u`, `dy = y−x`.
    par: Array2<C64>,
    /// `cross[(dv+r, dq+r)]` with `dv = v−x`, `dq = y−u`.
    cross: Array2<C64>,
    has_cross: bool,
    site_mask: Option<Vec<f64>>,
    origin: KernelOrigin,
}

fn table_max(t: &Array2<C64>) -> f64 {
    t.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl CovarianceKernel {
    /// Validates band geometry and the two symmetries every genuine
    /// covariance of a Hermitian field satisfies:
    /// `kappa(x,u;v,y) = kappa(v,y;x,u)` (factor exchange) and
    /// `kappa(x,u;v,y) = conj(kappa(u,x;y,v))` (Hermitian entries).
    /// On the tables these read `t[a,b] = t[−a,−b]` and `t[a,b] = conj(t[b,a])`.
    pub fn new(
        n: usize,
        beta: Beta,
        range: usize,
        par: Array2<C64>,
        cross: Array2<C64>,
        origin: KernelOrigin,
    ) -> Result<Self> {
        let w = 2 * range + 1;
        if 2 * range >= n {
            return Err(Error::BadKernel("interaction range must satisfy 2r < N"));
        }
        if par.dim() != (w, w) || cross.dim() != (w, w) {
            return Err(Error::BadKernel("tables must be (2r+1) x (2r+1)"));
        }
        if par.iter().chain(cross.iter()).any(|z| !z.is_finite()) {
            return Err(Error::BadKernel("non-finite table entry"));
        }
        let scale = table_max(&par).max(table_max(&cross)).max(1e-300);
        for t in [&par, &cross] {
            for a in 0..w {
                for b in 0..w {
                    let rev = t[(w - 1 - a, w - 1 - b)];
                    let swp = t[(b, a)].conj();
                    if (t[(a, b)] - rev).norm() > 1e-12 * scale
                        || (t[(a, b)] - swp).norm() > 1e-12 * scale
                    {
                        return Err(Error::BadKernel(
                            "table violates covariance symmetry",
                        ));
                    }
                }
            }
        }
        let has_cross = table_max(&cross) > 0.0;
        Ok(CovarianceKernel {
            n,
            beta,
            range,
            par,
            cross,
            has_cross,
            site_mask: None,
            origin,
        })
    }

    /// Independent-entry kernel: `par(0,0) = scale`, plus `cross(0,0) = scale`
    /// in the real symmetric class (diagonal variance doubles).
    pub fn iid(n: usize, beta: Beta, scale: f64) -> Result<Self> {
        let mut par = Array2::zeros((1, 1));
        let mut cross = Array2::zeros((1, 1));
        par[(0, 0)] = C64::new(scale, 0.0);
        if beta == Beta::One {
            cross[(0, 0)] = C64::new(scale, 0.0);
        }
        Self::new(n, beta, 0, par, cross, KernelOrigin::IidEntries { scale })
    }

    /// Kernel of the Hermitized moving-average field `W = (C + C*)/√2` with
    /// `C = taps ⋆ ξ`: the channels are symmetrized tap autocorrelations,
    /// with the crossed channel active only for real `ξ` (β = 1).
    pub fn from_filter(n: usize, beta: Beta, taps: FilterTaps, floor: f64) -> Result<Self> {
        let r = 2 * taps.half_width();
        let w = 2 * r + 1;
        let mut par = Array2::zeros((w, w));
        let mut cross = Array2::zeros((w, w));
        for a in -(r as i64)..=(r as i64) {
            for b in -(r as i64)..=(r as i64) {
                let sym = 0.5 * (taps.autocorrelation(a, b) + taps.autocorrelation(b, a));
                par[((a + r as i64) as usize, (b + r as i64) as usize)] = C64::new(sym, 0.0);
                if beta == Beta::One {
                    cross[((a + r as i64) as usize, (b + r as i64) as usize)] =
                        C64::new(sym, 0.0);
                }
            }
        }
        if floor < 0.0 || !floor.is_finite() {
            return Err(Error::BadKernel("mean-field floor must be finite and >= 0"));
        }
        par[(r, r)] += C64::new(floor, 0.0);
        if beta == Beta::One {
            cross[(r, r)] += C64::new(floor, 0.0);
        }
        Self::new(n, beta, r, par, cross, KernelOrigin::Filter { taps, floor })
    }

    /// Applies a per-site weight `m`, sending `kappa` to
    /// `m_x m_u m_v m_y kappa`; the sampler scales `W_xu` by `m_x m_u`.
    pub fn masked(mut self, mask: Vec<f64>) -> Result<Self> {
        if mask.len() != self.n || mask.iter().any(|m| !m.is_finite() || *m < 0.0) {
            return Err(Error::BadKernel("mask needs N finite nonnegative weights"));
        }
        self.site_mask = Some(mask);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> Beta {
        self.beta
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn origin(&self) -> &KernelOrigin {
        &self.origin
    }

    pub fn site_mask(&self) -> Option<&[f64]> {
        self.site_mask.as_deref()
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.site_mask.is_none()
    }

    /// Parallel-channel table entry at signed offsets `(p, dy)`; zero
    /// outside the band.
    pub fn table_par(&self, p: i64, dy: i64) -> C64 {
        let r = self.range as i64;
        if p.abs() <= r && dy.abs() <= r {
            self.par[((p + r) as usize, (dy + r) as usize)]
        } else {
            C64::new(0.0, 0.0)
        }
    }

    /// Crossed-channel table entry at signed offsets `(dv, dq)`; zero
    /// outside the band.
    pub fn table_cross(&self, dv: i64, dq: i64) -> C64 {
        let r = self.range as i64;
        if self.has_cross && dv.abs() <= r && dq.abs() <= r {
            self.cross[((dv + r) as usize, (dq + r) as usize)]
        } else {
            C64::new(0.0, 0.0)
        }
    }

    pub fn has_cross_channel(&self) -> bool {
        self.has_cross
    }

    fn wrap(&self, a: usize, b: usize) -> i64 {
        let n = self.n as i64;
        let mut d = (b as i64 - a as i64).rem_euclid(n);
        if d > n / 2 {
            d -= n;
        }
        d
    }

    fn mask_at(&self, x: usize) -> f64 {
        self.site_mask.as_ref().map_or(1.0, |m| m[x])
    }

    /// `kappa(x,u;v,y) = E[w_xu w_vy]`, zero outside both bands.
    pub fn value(&self, x: usize, u: usize, v: usize, y: usize) -> C64 {
        let r = self.range as i64;
        let mut acc = C64::new(0.0, 0.0);
        let (p, dy) = (self.wrap(u, v), self.wrap(x, y));
        if p.abs() <= r && dy.abs() <= r {
            acc += self.par[((p + r) as usize, (dy + r) as usize)];
        }
        let (dv, dq) = (self.wrap(x, v), self.wrap(u, y));
        if self.has_cross && dv.abs() <= r && dq.abs() <= r {
            acc += self.cross[((dv + r) as usize, (dq + r) as usize)];
        }
        acc * (self.mask_at(x) * self.mask_at(u) * self.mask_at(v) * self.mask_at(y))
    }

    /// `S[R]_xy = (1/N) Σ_uv kappa(x,u;v,y) R_uv`. The parallel channel
    /// contracts against diagonal sums of `R` in O(N r²); the crossed channel
    /// costs O(N² r²) and is skipped when absent.
    pub fn apply(&self, rmat: &CMat) -> CMat {
        let n = self.n;
        let r = self.range as i64;
        let inv_n = 1.0 / n as f64;
        // Fold the (m_u m_v R_uv) part of the mask into the input once.
        let masked: CMat;
        let rin = if let Some(m) = &self.site_mask {
            masked = CMat::from_shape_fn((n, n), |(u, v)| rmat[(u, v)] * (m[u] * m[v]));
            &masked
        } else {
            rmat
        };

        let idx = |a: usize, d: i64| -> usize { (a as i64 + d).rem_euclid(n as i64) as usize };

        // s1[p] = Σ_u R_{u, u+p}
        let mut s1 = vec![C64::new(0.0, 0.0); (2 * r + 1) as usize];
        for (slot, p) in (-r..=r).enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for u in 0..n {
                acc += rin[(u, idx(u, p))];
            }
            s1[slot] = acc;
        }

        let mut out = CMat::zeros((n, n));
        for x in 0..n {
            for dy in -r..=r {
                let y = idx(x, dy);
                let mut acc = C64::new(0.0, 0.0);
                for slot in 0..(2 * r + 1) as usize {
                    acc += self.par[(slot, (dy + r) as usize)] * s1[slot];
                }
                out[(x, y)] += acc * inv_n;
            }
        }

        if self.has_cross {
            for x in 0..n {
                for y in 0..n {
                    let mut acc = C64::new(0.0, 0.0);
                    for dv in -r..=r {
                        let v = idx(x, dv);
                        for dq in -r..=r {
                            let u = idx(y, -dq);
                            acc += self.cross[((dv + r) as usize, (dq + r) as usize)]
                                * rin[(u, v)];
                        }
                    }
                    out[(x, y)] += acc * inv_n;
                }
            }
        }

        if let Some(m) = &self.site_mask {
            for x in 0..n {
                for y in 0..n {
                    out[(x, y)] *= m[x] * m[y];
                }
            }
        }
        out
    }

    /// `max_xy (1/N) Σ_uv |kappa(x,u;v,y)|` — a direct bound on
    /// `‖S[R]‖_max` over inputs with `‖R‖_max ≤ 1`.
    pub fn entry_bound(&self) -> f64 {
        let r = self.range;
        let w = 2 * r + 1;
        let mut par_worst = 0.0f64;
        for dy in 0..w {
            let col: f64 = (0..w).map(|p| self.par[(p, dy)].norm()).sum();
            par_worst = par_worst.max(col);
        }
        let cross_sum: f64 = self.cross.iter().map(|z| z.norm()).sum();
        let mask_peak = self
            .site_mask
            .as_ref()
            .map_or(1.0, |m| m.iter().cloned().fold(0.0, f64::max).powi(4));
        (par_worst + cross_sum / self.n as f64) * mask_peak
    }

    /// Minimum eigenvalue of the covariance of the real degrees of freedom
    /// (`Re/Im` of upper-triangle entries); `≥ 0` up to round-off certifies
    /// the kernel as a genuine covariance. Dense assembly, guarded to small N.
    pub fn real_covariance_min_eig(&self) -> Result<f64> {
        if self.n > 32 {
            return Err(Error::BadKernel(
                "real-covariance assembly is guarded to N <= 32",
            ));
        }
        let n = self.n;
        // Degrees of freedom: diagonal entries (real), then for x < u the
        // real part and, in the complex class, the imaginary part.
        let mut dofs: Vec<(usize, usize, bool)> = Vec::new(); // (x, u, is_imag)
        for x in 0..n {
            dofs.push((x, x, false));
        }
        for x in 0..n {
            for u in (x + 1)..n {
                dofs.push((x, u, false));
                if self.beta == Beta::Two {
                    dofs.push((x, u, true));
                }
            }
        }
        let d = dofs.len();
        let mut cov = herm_core::CMat::zeros((d, d));
        for (i, &(x, u, imi)) in dofs.iter().enumerate() {
            for (j, &(v, y, imj)) in dofs.iter().enumerate() {
                // z = w_xu, z' = w_vy; m1 = E[z z'], m2 = E[z conj(z')].
                let m1 = self.value(x, u, v, y);
                let m2 = self.value(x, u, y, v);
                let val = match (imi, imj) {
                    (false, false) => 0.5 * (m1 + m2).re,
                    (true, true) => 0.5 * (m2 - m1).re,
                    (false, true) => 0.5 * (m1 - m2).im,
                    (true, false) => 0.5 * (m1 + m2).im,
                };
                cov[(i, j)] = C64::new(val, 0.0);
            }
        }
        let h = herm_core::HermMatrix::from_matrix_checked(&cov, 1e-10)
            .map_err(|_| Error::BadKernel("assembled covariance is not symmetric"))?;
        Ok(herm_core::eigh_values(&h)
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min))
    }
}
