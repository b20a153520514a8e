mod common;

use common::{linspace, semicircle_curve};
use dos_analysis::{quantile_index, DosCurve, DosPoint, Error};

#[test]
fn symmetry_puts_half_the_spectrum_left_of_zero() {
    let curve = semicircle_curve(-2.5, 2.5, 101);
    assert_eq!(quantile_index(&curve, 0.0, 100).unwrap(), 50);
}

#[test]
fn semicircle_mass_left_of_one() {
    // ∫_{-2}^{1} rho_sc = 1/2 + (sqrt(3)/2 + pi/3)/(2·pi) = 0.80450, so a
    // thousand eigenvalues put index ceil(804.50) = 805 at energy one. The
    // 0.01-step grid keeps quadrature error well below the 0.5 margin.
    let curve = semicircle_curve(-2.5, 2.5, 501);
    assert_eq!(quantile_index(&curve, 1.0, 1000).unwrap(), 805);
}

#[test]
fn extremes_clamp_to_the_full_range() {
    let curve = semicircle_curve(-2.5, 2.5, 101);
    for (tau, want) in [(-2.5, 0), (-9.0, 0), (2.5, 1000), (9.0, 1000)] {
        assert_eq!(quantile_index(&curve, tau, 1000).unwrap(), want);
    }
}

#[test]
fn index_is_nondecreasing_in_tau() {
    let curve = semicircle_curve(-2.5, 2.5, 101);
    let mut prev = 0;
    for tau in linspace(-2.6, 2.6, 149) {
        let idx = quantile_index(&curve, tau, 137).unwrap();
        assert!(idx >= prev, "index dropped at tau = {tau}");
        prev = idx;
    }
    assert_eq!(prev, 137);
}

#[test]
fn rejects_degenerate_inputs() {
    let curve = semicircle_curve(-2.5, 2.5, 11);
    assert!(matches!(
        quantile_index(&curve, f64::NAN, 10),
        Err(Error::BadParam(_))
    ));
    assert!(matches!(
        quantile_index(&curve, 0.0, 0),
        Err(Error::BadParam(_))
    ));

    let zero = DosCurve::new(
        (0..12)
            .map(|i| DosPoint {
                tau: i as f64,
                eta: 0.1,
                rho: 0.0,
                rho_extrapolated: 0.0,
                converged: true,
            })
            .collect(),
        true,
    )
    .unwrap();
    assert!(matches!(
        quantile_index(&zero, 5.0, 10),
        Err(Error::BadParam(_))
    ));

    let lonely = DosCurve::new(
        (0..3)
            .map(|i| DosPoint {
                tau: i as f64,
                eta: 0.1,
                rho: if i == 1 { 0.3 } else { f64::NAN },
                rho_extrapolated: if i == 1 { 0.3 } else { f64::NAN },
                converged: i == 1,
            })
            .collect(),
        true,
    )
    .unwrap();
    assert!(matches!(
        quantile_index(&lonely, 1.0, 10),
        Err(Error::BadParam(_))
    ));
}
