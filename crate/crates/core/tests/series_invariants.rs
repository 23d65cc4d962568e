//! Cross-module numerical invariants that complement the acceptance
//! criteria: the reduction step behind the SU(2)/SO(2) divergence proof,
//! the global bound on spherical functions, and dimension monotonicity.

use rankone::catalog::{list_catalog, SpaceFamily, SymmetricSpace};
use rankone::dimension::dim_spherical;
use rankone::jacobi::{RadialPoint, SphericalScan};

/// On SU(2)/SO(2) the squared-expansion series
/// `sum (1/n)(sin(t1(2n+1))+1)(sin(t2(2n+1))+1)` differs from
/// `sum (1/n)(sin(t1(2n+1)) sin(t2(2n+1)) + 1)` by
/// `sum (1/n)(sin(t1(2n+1)) + sin(t2(2n+1)))`, which converges at
/// continuous points. The difference of partial sums must therefore
/// stabilise even though both series diverge.
#[test]
fn expansion_cross_terms_converge() {
    for (t1, t2) in [
        (1.0f64, 1.3f64),
        (std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_4),
    ] {
        let mut full = 0.0f64;
        let mut reduced = 0.0f64;
        let mut tail_lo = f64::INFINITY;
        let mut tail_hi = f64::NEG_INFINITY;
        for n in 1..=1_000_000u64 {
            let nf = n as f64;
            let s1 = ((2.0 * nf + 1.0) * t1).sin();
            let s2 = ((2.0 * nf + 1.0) * t2).sin();
            full += (s1 + 1.0) * (s2 + 1.0) / nf;
            reduced += (s1 * s2 + 1.0) / nf;
            if n >= 100_000 {
                let d = full - reduced;
                tail_lo = tail_lo.min(d);
                tail_hi = tail_hi.max(d);
            }
        }
        assert!(
            tail_hi - tail_lo <= 0.01,
            "difference still wandering on [1e5, 1e6]: range {}",
            tail_hi - tail_lo
        );
        assert!(full.is_finite() && reduced.is_finite());
    }
}

/// Spherical functions are matrix coefficients at unit vectors: bounded by
/// one everywhere, for every degree.
#[test]
fn spherical_functions_bounded_by_one_on_dense_grid() {
    let mut worst = 0.0f64;
    for space in list_catalog(4).unwrap() {
        for k in 0..=200 {
            let t = k as f64 * std::f64::consts::PI / 200.0;
            let mut scan = SphericalScan::new(&space, RadialPoint::new(t));
            for _ in 0..=10_000u32 {
                worst = worst.max(scan.next_value().abs());
            }
        }
    }
    assert!(worst <= 1.0 + 1e-9, "max |phi| = {worst}");
}

/// Dimensions increase strictly in the degree on every catalog space.
#[test]
fn dimensions_strictly_increasing_to_ten_thousand() {
    for space in list_catalog(6).unwrap() {
        let mut prev = 0.0;
        for n in 0..=10_000u32 {
            let d = dim_spherical(&space, n).dim;
            assert!(d > prev, "{space} n={n}: {d} <= {prev}");
            prev = d;
        }
    }
}

/// The quadrature oracle and the closed form stay within their contracted
/// tolerance on a denser sweep than the acceptance criterion uses.
#[test]
fn quadrature_oracle_sweep() {
    for space in list_catalog(5).unwrap() {
        let p = space.jacobi_params();
        let half = p.a.fract() != 0.0 || p.b.fract() != 0.0;
        let tol = if half { 1e-6 } else { 1e-8 };
        for n in [0u32, 7, 19, 30] {
            let d = dim_spherical(&space, n).dim;
            let q = rankone::dimension::dim_by_quadrature(&space, n, 2 * n as usize + 64).unwrap();
            assert!((q - d).abs() <= tol * d, "{space} n={n}: {q} vs {d}");
        }
    }
}

/// Spot check: the spherical functions at the non-regular point of a
/// two-root space come out as exact rational ratios (binomial endpoint
/// forms), here AIII(2) where phi_n(pi/2) = (-1)^n/(n+1).
#[test]
fn aiii2_nonregular_point_closed_form() {
    let space = SymmetricSpace::new(SpaceFamily::AIII(2)).unwrap();
    let mut scan = SphericalScan::new(&space, RadialPoint::new(std::f64::consts::FRAC_PI_2));
    for n in 0..=500u32 {
        let got = scan.next_value();
        let want = if n % 2 == 0 { 1.0 } else { -1.0 } / (n as f64 + 1.0);
        assert!((got - want).abs() <= 1e-12, "n={n}: {got} vs {want}");
    }
}
