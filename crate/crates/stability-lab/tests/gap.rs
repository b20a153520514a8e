mod common;

use common::{profile_random_pair, solve};
use herm_core::{avg_trace, C64, CMat, FnSuperOp, Sandwich, Scaled, SuperOp};
use stability_lab::{
    compute_saturation, fit_sandwich_bounds, spectral_gap_verify, Error, GAP_PROBE_COUNT,
    GAP_PROBE_SEED,
};

fn averaging(n: usize) -> impl SuperOp {
    FnSuperOp {
        n,
        f: move |r: &CMat| CMat::from_diag_elem(n, avg_trace(r)),
        f_adj: move |r: &CMat| CMat::from_diag_elem(n, avg_trace(r)),
    }
}

/// The averaging map `T[R] = ⟨R⟩1` meets the sandwich with `γ = Γ = 1`
/// exactly: its spectrum is `{0, …, 0, 1}`, so the observed gap is a full
/// `1` against the predicted `1/2`, and the top eigenmatrix is the
/// identity, pinched between `γ/√Γ = 1` and `Γ = 1`.
#[test]
fn averaging_map_has_the_textbook_gap() {
    let t = averaging(8);

    let fit = fit_sandwich_bounds(&t, GAP_PROBE_COUNT, GAP_PROBE_SEED).unwrap();
    assert!((fit.gamma - 1.0).abs() <= 1e-12);
    assert!((fit.big_gamma - 1.0).abs() <= 1e-12);

    let report = spectral_gap_verify(&t, 1.0, 1.0).unwrap();
    assert!(report.hypothesis_ok);
    let bounds = report.bounds.unwrap();
    assert!((bounds.theta_predicted - 0.5).abs() <= 1e-15);
    assert!((bounds.theta_observed - 1.0).abs() <= 1e-10);
    assert!((bounds.top_eigenvalue - 1.0).abs() <= 1e-10);
    assert!(bounds.top_simple);
    assert!(bounds.spectrum_in_band);
    assert!(bounds.eigenmatrix_ok);
    assert!((bounds.eigenmatrix_min - 1.0).abs() <= 1e-9);
    assert!((bounds.eigenmatrix_max - 1.0).abs() <= 1e-9);
}

/// Twenty normalized saturated operators across three dimensions, with the
/// sandwich constants fitted on the verification probe family itself. The
/// spectral conclusions — top simplicity, the gap exceeding its prediction,
/// the eigenmatrix enclosure — are checked on the dense spectrum, which the
/// fit never saw.
#[test]
fn random_saturations_pass_verification() {
    let cases = (0..20).map(|k| {
        let n = [4, 6, 8][k % 3];
        (n, 100 + k as u64)
    });
    for (n, seed) in cases {
        let data = profile_random_pair(n, seed);
        let sol = solve(&data, 0.1, 0.4);
        let sat = compute_saturation(&sol, data.self_energy()).unwrap();
        let normalized = Scaled {
            c: C64::new(1.0 / sat.sp_radius(), 0.0),
            op: &sat,
        };

        let fit = fit_sandwich_bounds(&normalized, GAP_PROBE_COUNT, GAP_PROBE_SEED).unwrap();
        assert!(fit.gamma > 0.0, "n {n} seed {seed}: no lower constant");

        let report = spectral_gap_verify(&normalized, fit.gamma, fit.big_gamma).unwrap();
        assert!(report.hypothesis_ok, "n {n} seed {seed}");
        let bounds = report.bounds.unwrap();
        assert!((bounds.top_eigenvalue - 1.0).abs() <= 1e-8, "n {n} seed {seed}");
        assert!(bounds.top_simple, "n {n} seed {seed}");
        assert!(bounds.spectrum_in_band, "n {n} seed {seed}");
        assert!(
            bounds.theta_observed >= bounds.theta_predicted - 1e-8,
            "n {n} seed {seed}: observed {} predicted {}",
            bounds.theta_observed,
            bounds.theta_predicted
        );
        assert!(bounds.eigenmatrix_ok, "n {n} seed {seed}");
    }
}

/// A sandwich factor with a zero diagonal entry annihilates part of the
/// positive cone: the identity probe immediately exposes that no positive
/// `γ` works, and no spectral claims are made.
#[test]
fn degenerate_support_fails_the_hypothesis() {
    let n = 6;
    let mut k = CMat::eye(n);
    k[(0, 0)] = C64::new(0.0, 0.0);
    let t = Sandwich::new(k);

    let fit = fit_sandwich_bounds(&t, GAP_PROBE_COUNT, GAP_PROBE_SEED).unwrap();
    assert!(fit.gamma <= 1e-12);

    let report = spectral_gap_verify(&t, 0.1, 2.0).unwrap();
    assert!(!report.hypothesis_ok);
    assert!(report.bounds.is_none());
    assert!(report.lower_slack <= -0.1 + 1e-9);
}

#[test]
fn dimension_and_parameter_validation() {
    let t = averaging(8);
    assert!(matches!(
        spectral_gap_verify(&t, 0.0, 1.0),
        Err(Error::BadParam(_))
    ));
    assert!(matches!(
        spectral_gap_verify(&t, 2.0, 1.0),
        Err(Error::BadParam(_))
    ));
    assert!(matches!(
        fit_sandwich_bounds(&t, 0, GAP_PROBE_SEED),
        Err(Error::BadParam(_))
    ));

    let tiny = averaging(1);
    assert!(matches!(
        spectral_gap_verify(&tiny, 1.0, 1.0),
        Err(Error::BadParam(_))
    ));

    let big = averaging(32);
    assert!(matches!(
        spectral_gap_verify(&big, 1.0, 1.0),
        Err(Error::TooLarge { .. })
    ));
}
