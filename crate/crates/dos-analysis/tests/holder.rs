mod common;

use common::semicircle_curve;
use dos_analysis::{holder_check, DosCurve, DosPoint, Error, HOLDER_BOUND};

#[test]
fn the_bulk_is_lipschitz() {
    // Away from the edges the density is smooth with slope below 0.2, so
    // even the finest candidate exponent stays bounded.
    let full = semicircle_curve(-2.5, 2.5, 101);
    let bulk: Vec<DosPoint> = full
        .points()
        .iter()
        .filter(|p| p.tau.abs() <= 1.5)
        .cloned()
        .collect();
    let report = holder_check(&DosCurve::new(bulk, true).unwrap()).unwrap();
    assert_eq!(report.largest_bounded, Some(1.0));
    let lip = report.fits.iter().find(|f| f.exponent == 1.0).unwrap();
    assert!(lip.constant < 0.5, "bulk Lipschitz constant {}", lip.constant);
}

#[test]
fn crossing_the_edge_degrades_to_a_square_root_modulus() {
    // The 1.95 → 2.0 cell drops by ~0.066, putting the Lipschitz constant
    // near 1.3 while the square-root modulus stays near 0.3.
    let report = holder_check(&semicircle_curve(-2.5, 2.5, 101)).unwrap();
    assert_eq!(report.largest_bounded, Some(0.5));
    let lip = report.fits.iter().find(|f| f.exponent == 1.0).unwrap();
    assert!(lip.constant > HOLDER_BOUND);
    let sqrt = report.fits.iter().find(|f| f.exponent == 0.5).unwrap();
    assert!(sqrt.constant <= HOLDER_BOUND);
}

#[test]
fn a_flat_zero_curve_passes_every_fit() {
    let zero = DosCurve::new(
        (0..12)
            .map(|i| DosPoint {
                tau: i as f64 * 0.3,
                eta: 0.05,
                rho: 0.0,
                rho_extrapolated: 0.0,
                converged: true,
            })
            .collect(),
        false,
    )
    .unwrap();
    let report = holder_check(&zero).unwrap();
    assert_eq!(report.largest_bounded, Some(1.0));
    for fit in &report.fits {
        assert_eq!(fit.constant, 0.0);
    }
}

#[test]
fn too_few_points_are_rejected() {
    let short = semicircle_curve(-1.0, 1.0, 9);
    assert!(matches!(holder_check(&short), Err(Error::BadParam(_))));
}
