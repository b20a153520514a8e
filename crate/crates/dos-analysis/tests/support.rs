mod common;

use std::sync::OnceLock;

use common::{linspace, semicircle_curve, two_block_pair, wigner_pair};
use dos_analysis::{
    dos_on_real_line, estimate_support, support_bound, DosCurve, Error, DEFAULT_SUPPORT_DELTA,
};
use herm_core::HermMatrix;
use mde_solver::{DataPair, SolverConfig};
use self_energy::SelfEnergy;

// The block density depends on the ±3 site fractions, not the dimension,
// so a small matrix gives the full two-component picture.
fn two_block_curve() -> &'static DosCurve {
    static CURVE: OnceLock<DosCurve> = OnceLock::new();
    CURVE.get_or_init(|| {
        dos_on_real_line(
            &two_block_pair(8, 3.0),
            &linspace(-6.0, 6.0, 121),
            1e-2,
            2,
            &SolverConfig::default(),
        )
        .unwrap()
    })
}

#[test]
fn a_priori_bound_examples() {
    assert_eq!(support_bound(&wigner_pair(8)), 2.0);

    let shifted = DataPair::new(
        HermMatrix::from_real_diag(&[3.0; 8]),
        SelfEnergy::mean_field(8, 1.0),
        None,
    )
    .unwrap();
    assert!((support_bound(&shifted) - 5.0).abs() <= 1e-12);

    // Degenerate covariance: the density is the spectral measure of the
    // expectation, so the bound collapses to its operator norm.
    let bare = DataPair::new(
        HermMatrix::from_real_diag(&[3.0, -3.0, 1.0, 0.5]),
        SelfEnergy::mean_field(4, 0.0),
        None,
    )
    .unwrap();
    assert!((support_bound(&bare) - 3.0).abs() <= 1e-12);
}

#[test]
fn semicircle_support_at_a_coarse_threshold() {
    // On the 0.05-step grid the outermost energies whose density clears
    // 0.05 are ±1.95: the density at 1.95 is 0.0707, at 2.0 it is zero up
    // to extrapolation error well below the threshold.
    let curve = semicircle_curve(-2.5, 2.5, 101);
    let est = estimate_support(&curve, 0.05).unwrap();
    let (lo, hi) = est.bulk.expect("bulk visible");
    assert!((hi - 1.95).abs() <= 1e-9, "upper endpoint {hi}");
    assert!((lo + 1.95).abs() <= 1e-9, "lower endpoint {lo}");
    assert!(est.gaps.is_empty());
}

#[test]
fn separated_blocks_show_one_internal_gap() {
    let data = two_block_pair(8, 3.0);
    let est = estimate_support(two_block_curve(), DEFAULT_SUPPORT_DELTA).unwrap();
    let (lo, hi) = est.bulk.expect("bulk visible");
    assert_eq!(est.gaps.len(), 1, "gaps: {:?}", est.gaps);
    let (gl, gr) = est.gaps[0];
    assert!(gl < 0.0 && 0.0 < gr, "gap ({gl}, {gr}) misses the origin");
    assert!((gl + gr).abs() <= 1e-9, "gap not symmetric");
    // Containment in the a priori bound, one grid step of slack.
    let step = 0.1;
    let kappa = support_bound(&data);
    assert!(lo >= -kappa - step && hi <= kappa + step);
}

#[test]
fn threshold_above_the_peak_reports_empty_support() {
    // The semicircle peaks at 1/pi ≈ 0.318.
    let curve = semicircle_curve(-2.5, 2.5, 101);
    let est = estimate_support(&curve, 0.5).unwrap();
    assert!(est.bulk.is_none());
    assert!(est.gaps.is_empty());
    assert_eq!(est.delta, 0.5);
}

#[test]
fn estimates_stay_within_the_a_priori_bound() {
    let step = 0.1;
    let wigner = wigner_pair(8);
    let wigner_curve = dos_on_real_line(
        &wigner,
        &linspace(-2.5, 2.5, 51),
        1e-2,
        2,
        &SolverConfig::default(),
    )
    .unwrap();
    for (data, curve) in [
        (&wigner, &wigner_curve),
        (&two_block_pair(8, 3.0), two_block_curve()),
    ] {
        let kappa = support_bound(data);
        for delta in [0.005, 0.02, 0.1] {
            if let Some((lo, hi)) = estimate_support(curve, delta).unwrap().bulk {
                assert!(lo >= -kappa - step && hi <= kappa + step);
            }
        }
    }
}

#[test]
fn rejects_bad_thresholds() {
    let curve = semicircle_curve(-2.5, 2.5, 11);
    for delta in [0.0, -0.1, f64::NAN] {
        assert!(matches!(
            estimate_support(&curve, delta),
            Err(Error::BadParam(_))
        ));
    }
}
