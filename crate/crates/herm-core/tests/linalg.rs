use approx::assert_abs_diff_eq;
use herm_core::{eigh, herm_fn, inverse, op_norm, C64, CMat, Error, HermMatrix};
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

fn random_herm(rng: &mut ChaCha12Rng, n: usize) -> HermMatrix {
    HermMatrix::from_upper(n, |x, y| {
        if x == y {
            C64::new(rng.random::<f64>() - 0.5, 0.0)
        } else {
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        }
    })
    .unwrap()
}

#[test]
fn eigh_reconstructs_matrix() {
    let mut rng = ChaCha12Rng::seed_from_u64(21);
    let h = random_herm(&mut rng, 8);
    let (vals, vecs) = eigh(&h);
    // Ascending order.
    for w in vals.windows(2) {
        assert!(w[0] <= w[1]);
    }
    // V diag(vals) V* == H.
    let lam = CMat::from_diag(&vals.mapv(|v| C64::new(v, 0.0)));
    let rebuilt = vecs.dot(&lam).dot(&herm_core::adjoint(&vecs));
    let err = (&rebuilt - h.as_mat())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-12, "reconstruction error {err}");
}

#[test]
fn herm_fn_square_root_squares_back() {
    let mut rng = ChaCha12Rng::seed_from_u64(22);
    let b = CMat::from_shape_fn((6, 6), |_| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let gram = herm_core::adjoint(&b).dot(&b);
    let h = HermMatrix::from_matrix_checked(&gram, 1e-12).unwrap();
    let root = herm_fn(&h, |t| t.max(0.0).sqrt());
    let squared = root.as_mat().dot(root.as_mat());
    let err = (&squared - h.as_mat())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-11, "sqrt round-trip error {err}");
}

#[test]
fn inverse_round_trips() {
    let mut rng = ChaCha12Rng::seed_from_u64(23);
    let m = CMat::from_shape_fn((7, 7), |_| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    }) + CMat::eye(7) * C64::new(4.0, 0.0);
    let minv = inverse(&m).unwrap();
    let prod = m.dot(&minv);
    let err = (&prod - &CMat::eye(7))
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-12, "inverse error {err}");
}

#[test]
fn inverse_diagonal_fast_path_is_exact() {
    // Exactly-diagonal input takes the O(N) reciprocal path.
    let d = CMat::from_diag(&ndarray::arr1(&[
        C64::new(2.0, 0.0),
        C64::new(0.0, 4.0),
        C64::new(-0.5, 0.5),
    ]));
    let dinv = inverse(&d).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            if x == y {
                let want = C64::new(1.0, 0.0) / d[(x, x)];
                assert_eq!(dinv[(x, y)], want);
            } else {
                assert_eq!(dinv[(x, y)], C64::new(0.0, 0.0));
            }
        }
    }
}

#[test]
fn inverse_flags_singular_input() {
    let mut m = CMat::zeros((3, 3));
    m[(0, 0)] = C64::new(1.0, 0.0);
    // Rank-1 matrix: rows 1 and 2 are zero.
    match inverse(&m) {
        Err(Error::SingularMatrix) => {}
        other => panic!("expected SingularMatrix, got {other:?}"),
    }
}

#[test]
fn op_norm_of_scaled_unitary() {
    // A unitary scaled by 3 has operator norm exactly 3.
    let n = 6;
    let theta = std::f64::consts::PI / 7.0;
    let u = CMat::from_shape_fn((n, n), |(x, y)| {
        // DFT-like unitary.
        let phase = 2.0 * std::f64::consts::PI * (x * y) as f64 / n as f64 + theta;
        C64::new(phase.cos(), phase.sin()) / C64::new((n as f64).sqrt(), 0.0)
    });
    let scaled = &u * C64::new(3.0, 0.0);
    assert_abs_diff_eq!(op_norm(&scaled), 3.0, epsilon = 1e-10);
}
