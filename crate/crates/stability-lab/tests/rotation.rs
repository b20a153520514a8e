mod common;

use common::{profile_random_pair, random_herm, solve};
use herm_core::{avg_trace, eigh, C64, CMat, FnSuperOp, Scaled, SuperOp};
use rand_chacha::ChaCha12Rng;
use rand::SeedableRng;
use stability_lab::{compute_saturation, rotation_inversion_bound, Error};

fn averaging(n: usize) -> impl SuperOp {
    FnSuperOp {
        n,
        f: move |r: &CMat| CMat::from_diag_elem(n, avg_trace(r)),
        f_adj: move |r: &CMat| CMat::from_diag_elem(n, avg_trace(r)),
    }
}

/// With `U = 1` and `T = t·⟨·⟩1` everything is computable by hand:
/// `C_U − T` has eigenvalues `1 − t` (on the identity) and `1`, so the
/// inverse norm is `1/(1−t)`; the bound's margin is `|1 − t·⟨1, 1⟩| = 1−t`
/// and with the gap `θ = t` the implied constant comes out exactly `t`.
#[test]
fn identity_rotation_of_scaled_averaging_is_exact() {
    let n = 6;
    let u = CMat::eye(n);
    for t in [0.3, 0.7] {
        let base = averaging(n);
        let op = Scaled {
            c: C64::new(t, 0.0),
            op: &base,
        };
        let report = rotation_inversion_bound(&u, &op, t).unwrap();
        assert!(!report.singular);
        assert!((report.lhs - 1.0 / (1.0 - t)).abs() <= 1e-12, "t {t}");
        assert!((report.sp_norm - t).abs() <= 1e-12, "t {t}");
        assert!((report.ratio - t).abs() <= 1e-10, "t {t}");
    }
}

/// `U = i·1` realizes the sign-flipped sandwich `C_U = −Id` (scalar phases
/// of `U` cancel only up to sign, since both factors carry the phase
/// unconjugated). Then `C_U − tP` has eigenvalues `−1 − t` and `−1`, whose
/// smallest magnitude is `1`: the inverse norm stays exactly `1` for every
/// `t`, with the complement eigenvalue — not the rotated top — binding.
#[test]
fn phase_flip_keeps_the_difference_invertible() {
    let n = 6;
    let u = CMat::eye(n).mapv(|z| z * C64::new(0.0, 1.0));
    for t in [0.3, 0.7] {
        let base = averaging(n);
        let op = Scaled {
            c: C64::new(t, 0.0),
            op: &base,
        };
        let report = rotation_inversion_bound(&u, &op, t).unwrap();
        assert!(!report.singular);
        assert!((report.lhs - 1.0).abs() <= 1e-12, "t {t}");
    }
}

/// At `t = 1` the unrotated difference `Id − P` annihilates the identity.
/// In floating point the zero eigenvalue survives only up to round-off in
/// the averaging coefficient, so the report shows either an explicit
/// factorization failure or an inverse norm at the 1/ε machine scale —
/// both read as "not invertible", never as a quietly moderate bound.
#[test]
fn aligned_rotation_is_reported_singular() {
    let n = 6;
    let u = CMat::eye(n);
    let base = averaging(n);
    let report = rotation_inversion_bound(&u, &base, 0.5).unwrap();
    assert!(
        report.singular || report.lhs >= 1e12,
        "aligned difference must surface as non-invertible, lhs {:.3e}",
        report.lhs
    );
    if report.singular {
        assert!(report.lhs.is_infinite());
        assert!(report.ratio.is_infinite());
    }
}

/// Twenty seeded (rotation, saturation) pairs: the estimate's two sides
/// stay finite and positive throughout; the implied constant is recorded,
/// not asserted — no universal value is claimed for it.
#[test]
fn random_rotations_stay_finite() {
    let mut worst_ratio = 0.0f64;
    for k in 0..20 {
        let data = profile_random_pair(6, 200 + k);
        let sol = solve(&data, 0.15, 0.35);
        let sat = compute_saturation(&sol, data.self_energy()).unwrap();
        let theta = sat.sp_radius() * sat.gap();
        assert!(theta > 1e-6, "seed {k}: degenerate gap");

        let mut rng = ChaCha12Rng::seed_from_u64(900 + k);
        let (_, vecs) = eigh(&random_herm(6, 1.0, &mut rng));
        let report = rotation_inversion_bound(&vecs, &sat, theta).unwrap();

        assert!(!report.singular, "seed {k}");
        assert!(report.lhs.is_finite() && report.lhs > 0.0, "seed {k}");
        assert!(report.rhs_without_constant > 0.0, "seed {k}");
        assert!(report.ratio.is_finite(), "seed {k}");
        worst_ratio = worst_ratio.max(report.ratio);
    }
    println!("largest implied constant across 20 rotations: {worst_ratio:.3}");
}

#[test]
fn invalid_inputs_are_rejected() {
    let n = 6;
    let base = averaging(n);

    let stretched = CMat::eye(n).mapv(|z| z * C64::new(2.0, 0.0));
    assert!(matches!(
        rotation_inversion_bound(&stretched, &base, 0.5),
        Err(Error::BadParam(_))
    ));

    let u = CMat::eye(n);
    assert!(matches!(
        rotation_inversion_bound(&u, &base, 0.0),
        Err(Error::BadParam(_))
    ));

    let small = CMat::eye(4);
    assert!(matches!(
        rotation_inversion_bound(&small, &base, 0.5),
        Err(Error::BadParam(_))
    ));

    let big = averaging(32);
    let ubig = CMat::eye(32);
    assert!(matches!(
        rotation_inversion_bound(&ubig, &big, 0.5),
        Err(Error::TooLarge { .. })
    ));
}
