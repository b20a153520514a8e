//! Linear maps on matrix space.
//!
//! All adjoints are taken with respect to the normalized inner product
//! `<R, T> = tr(R* T) / N`.

use crate::error::{Error, Result};
use crate::matrix::{adjoint, hs_norm, inner};
use crate::{C64, CMat};

pub trait SuperOp {
    fn dim(&self) -> usize;
    fn apply(&self, r: &CMat) -> CMat;
    fn apply_adjoint(&self, r: &CMat) -> CMat;
}

/// Identity map.
pub struct IdOp {
    pub n: usize,
}

impl SuperOp for IdOp {
    fn dim(&self) -> usize {
        self.n
    }
    fn apply(&self, r: &CMat) -> CMat {
        r.clone()
    }
    fn apply_adjoint(&self, r: &CMat) -> CMat {
        r.clone()
    }
}

/// Sandwiching `C_R[T] = R T R`; the adjoint is `C_{R*}` and the inverse,
/// when `R` is invertible, is `C_{R^{-1}}`.
pub struct Sandwich {
    r: CMat,
    r_adj: CMat,
}

impl Sandwich {
    pub fn new(r: CMat) -> Self {
        let r_adj = adjoint(&r);
        Sandwich { r, r_adj }
    }

    pub fn inverse(&self) -> Result<Sandwich> {
        let inv = crate::linalg::inverse(&self.r).map_err(|_| Error::SingularMatrix)?;
        Ok(Sandwich::new(inv))
    }

    pub fn matrix(&self) -> &CMat {
        &self.r
    }
}

impl SuperOp for Sandwich {
    fn dim(&self) -> usize {
        self.r.nrows()
    }
    fn apply(&self, t: &CMat) -> CMat {
        self.r.dot(t).dot(&self.r)
    }
    fn apply_adjoint(&self, t: &CMat) -> CMat {
        self.r_adj.dot(t).dot(&self.r_adj)
    }
}

/// Conjugation `K_R[T] = R* T R`, self-adjoint-consistent:
/// `<Q, K_R[T]> = <K_{R}[Q], T>` fails in general; the adjoint is `K_{R*}`.
pub struct ConjSandwich {
    r: CMat,
    r_adj: CMat,
}

impl ConjSandwich {
    pub fn new(r: CMat) -> Self {
        let r_adj = adjoint(&r);
        ConjSandwich { r, r_adj }
    }
}

impl SuperOp for ConjSandwich {
    fn dim(&self) -> usize {
        self.r.nrows()
    }
    fn apply(&self, t: &CMat) -> CMat {
        self.r_adj.dot(t).dot(&self.r)
    }
    fn apply_adjoint(&self, t: &CMat) -> CMat {
        self.r.dot(t).dot(&self.r_adj)
    }
}

/// Map defined by explicit closures for the action and its adjoint; used for
/// ad-hoc operators in oracles and tests.
pub struct FnSuperOp<F, G>
where
    F: Fn(&CMat) -> CMat,
    G: Fn(&CMat) -> CMat,
{
    pub n: usize,
    pub f: F,
    pub f_adj: G,
}

impl<F, G> SuperOp for FnSuperOp<F, G>
where
    F: Fn(&CMat) -> CMat,
    G: Fn(&CMat) -> CMat,
{
    fn dim(&self) -> usize {
        self.n
    }
    fn apply(&self, r: &CMat) -> CMat {
        (self.f)(r)
    }
    fn apply_adjoint(&self, r: &CMat) -> CMat {
        (self.f_adj)(r)
    }
}

/// `c * T` for a scalar `c`.
pub struct Scaled<'a> {
    pub c: C64,
    pub op: &'a dyn SuperOp,
}

impl SuperOp for Scaled<'_> {
    fn dim(&self) -> usize {
        self.op.dim()
    }
    fn apply(&self, r: &CMat) -> CMat {
        self.op.apply(r).mapv(|v| v * self.c)
    }
    fn apply_adjoint(&self, r: &CMat) -> CMat {
        self.op.apply_adjoint(r).mapv(|v| v * self.c.conj())
    }
}

/// Verifies `<Q, T[R]> = <T*[Q], R>` on deterministic dense probes; returns
/// the worst absolute deviation.
pub fn probe_adjoint_consistency(op: &dyn SuperOp, probes: usize) -> f64 {
    let n = op.dim();
    let probe = |s: usize| {
        CMat::from_shape_fn((n, n), |(x, y)| {
            C64::new(
                ((s * 31 + 3 * x + 7 * y + 1) as f64).sin(),
                ((s * 17 + 5 * x + 2 * y + 2) as f64).cos(),
            )
        })
    };
    let mut worst = 0.0f64;
    for s in 0..probes {
        let q = probe(2 * s);
        let r = probe(2 * s + 1);
        let lhs = inner(&q, &op.apply(&r));
        let rhs = inner(&op.apply_adjoint(&q), &r);
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// Power iteration for the spectral norm of `T` as an operator on the
/// normalized inner-product space: iterates `T* T` and returns the square
/// root of its top eigenvalue.
pub fn sp_norm_power(op: &dyn SuperOp, tol: f64, max_iter: usize) -> Result<f64> {
    let n = op.dim();
    let mut v = CMat::from_shape_fn((n, n), |(x, y)| {
        C64::new(
            1.0 + ((3 * x + 11 * y) as f64).sin() * 0.5,
            ((7 * x + 5 * y + 1) as f64).cos() * 0.5,
        )
    });
    let nv = hs_norm(&v);
    v.mapv_inplace(|z| z / nv);
    let mut lambda = 0.0f64;
    for it in 0..max_iter {
        let mut w = op.apply_adjoint(&op.apply(&v));
        let l = hs_norm(&w);
        if l == 0.0 {
            return Ok(0.0);
        }
        w.mapv_inplace(|z| z / l);
        if (l - lambda).abs() <= tol * l.max(1.0) {
            return Ok(l.sqrt());
        }
        lambda = l;
        v = w;
        let _ = it;
    }
    Err(Error::NoConvergence {
        what: "superoperator norm power iteration",
        iters: max_iter,
        last: lambda.sqrt(),
    })
}
