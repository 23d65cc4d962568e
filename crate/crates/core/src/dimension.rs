//! Dimensions of the spherical representations.
//!
//! Schur orthogonality gives `1/dim V_n` as the squared norm of the
//! spherical function against the normalised radial measure; combining it
//! with the known Jacobi-weight norm yields the closed form
//!
//! ```text
//! dim V_n = (2n+a+b+1) * Gamma(b+1) Gamma(n+a+b+1) Gamma(n+a+1)
//!           / (Gamma(a+b+2) Gamma(a+1) Gamma(n+b+1) Gamma(n+1))
//! ```
//!
//! For every catalog space `a+b` and `a-b` are integers, so the Gamma
//! ratios collapse to finite products and the whole expression is an exact
//! rational; it is evaluated as one (the value is a representation
//! dimension, hence an integer) and rounded once. A log-Gamma evaluation
//! at `n ~ 10^4` already carries absolute errors around `1e-11 * dim`,
//! which fails the integrality checks in the mid range — the exact product
//! costs nothing and is correct to the last bit.
//!
//! Two independent cross-checks guard the closed form: a Gauss–Legendre
//! quadrature of the Schur integral, and the growth-order fit against the
//! known exponent `m_alpha + m_2alpha`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use statrs::function::gamma::ln_gamma;

use crate::catalog::SymmetricSpace;
use crate::error::{Error, Result};
use crate::fit::fit_power_law;
use crate::jacobi::JacobiScan;
use crate::quadrature::gauss_legendre;

/// A spherical-representation dimension, as a float plus the growth order
/// `m_alpha + m_2alpha` it obeys.
#[derive(Debug, Clone, Copy)]
pub struct DimensionValue {
    pub n: u32,
    pub dim: f64,
    pub growth_order: u32,
}

/// `dim V_n` by the closed form above, computed exactly and rounded once.
///
/// ```
/// use rankone::catalog::{SpaceFamily, SymmetricSpace};
/// use rankone::dimension::dim_spherical;
///
/// let su2 = SymmetricSpace::new(SpaceFamily::AI).unwrap();
/// assert_eq!(dim_spherical(&su2, 7).dim, 15.0); // 2n + 1
/// ```
pub fn dim_spherical(space: &SymmetricSpace, n: u32) -> DimensionValue {
    let params = space.jacobi_params();
    let (two_a, two_b) = params
        .doubled_integers()
        .expect("catalog parameters are half-integral");
    // a+b and a-b are integers for every entry (both doubled values share parity)
    let sum_ab = (two_a + two_b) / 2;
    let diff_ab = (two_a - two_b) / 2;
    debug_assert_eq!(sum_ab * 2, two_a + two_b);

    let n_i = n as i64;
    let mut numer = BigInt::from(2 * n_i + sum_ab + 1);
    let mut denom = BigInt::from(sum_ab + 1);
    // Gamma(n+a+b+1)/Gamma(n+1) over Gamma(a+b+2)/Gamma(2) ... assembled as
    // plain factor lists: prod_{j<=a+b}(n+j)/j! and prod_{j<=a-b}(2n+2b+2j)/(2b+2j).
    for j in 1..=sum_ab {
        numer *= BigInt::from(n_i + j);
        if j > 1 {
            denom *= BigInt::from(j);
        }
    }
    for j in 1..=diff_ab {
        numer *= BigInt::from(2 * n_i + two_b + 2 * j);
        denom *= BigInt::from(two_b + 2 * j);
    }
    let ratio = BigRational::new(numer, denom);
    let dim = if ratio.is_integer() {
        ratio.to_integer().to_f64().unwrap_or(f64::INFINITY)
    } else {
        // general half-integral parameters outside the catalog
        big_ratio_f64(&ratio)
    };
    DimensionValue {
        n,
        dim,
        growth_order: space.m_alpha + space.m_2alpha,
    }
}

fn big_ratio_f64(r: &BigRational) -> f64 {
    let num = r.numer().abs().to_f64().unwrap_or(f64::INFINITY);
    let den = r.denom().abs().to_f64().unwrap_or(f64::INFINITY);
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * num / den
}

/// Independent oracle for [`dim_spherical`]: numerically integrates
/// `|phi_n|^2` against the normalised radial density and returns the
/// reciprocal.
///
/// After `x = cos beta(Z)` the density is `(1-x)^a (1+x)^b` up to the
/// Beta-function normaliser. For integral `(a, b)` the weighted integrand
/// is a polynomial and Gauss–Legendre in `x` is exact; for half-integral
/// parameters the weight has algebraic endpoint singularities that defeat
/// the rule in `x`, so the same rule is applied in `theta` where
/// `(1-cos)^a (1+cos)^b sin theta` is a trigonometric polynomial.
pub fn dim_by_quadrature(space: &SymmetricSpace, n: u32, node_count: usize) -> Result<f64> {
    if n > 50 {
        return Err(Error::Range(format!(
            "quadrature oracle supports n <= 50, got {n}"
        )));
    }
    if node_count < 2 * n as usize + 64 {
        return Err(Error::InvalidParameter(format!(
            "node_count must be at least 2n + 64 = {}, got {node_count}",
            2 * n as usize + 64
        )));
    }
    let params = space.jacobi_params();
    let (a, b) = (params.a, params.b);
    let half_integral = a.fract() != 0.0 || b.fract() != 0.0;
    let nodes = if half_integral {
        2 * node_count
    } else {
        node_count
    };
    let (xs, ws) = gauss_legendre(nodes);
    let prefactor =
        (ln_gamma(n as f64 + 1.0) + ln_gamma(a + 1.0) - ln_gamma(a + n as f64 + 1.0)).exp();
    let phi_sq = |x: f64| -> f64 {
        let mut scan = JacobiScan::new(params, x);
        let mut p = scan.next_value();
        for _ in 0..n {
            p = scan.next_value();
        }
        (prefactor * p).powi(2)
    };
    let raw: f64 = if half_integral {
        // map GL nodes to theta in [0, pi]
        xs.iter()
            .zip(&ws)
            .map(|(u, w)| {
                let theta = (u + 1.0) * std::f64::consts::FRAC_PI_2;
                let x = theta.cos();
                w * phi_sq(x) * (1.0 - x).powf(a) * (1.0 + x).powf(b) * theta.sin()
            })
            .sum::<f64>()
            * std::f64::consts::FRAC_PI_2
    } else {
        xs.iter()
            .zip(&ws)
            .map(|(x, w)| w * phi_sq(*x) * (1.0 - x).powi(a as i32) * (1.0 + x).powi(b as i32))
            .sum()
    };
    // closed-form normaliser 2^{a+b+1} B(a+1, b+1)
    let norm = 2f64.powf(a + b + 1.0)
        * (ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0)).exp();
    Ok(norm / raw)
}

/// Least-squares growth exponent of `dim V_n` over a geometric grid in
/// `n_range = (lo, hi)`, which must span at least a decade. The regression
/// of `log dim` on `log n` includes a `1/n` nuisance regressor: the plain
/// two-parameter fit picks up an `O(1/lo)` bias from the subleading terms
/// (about 0.03 for FII on `[10^3, 10^4]`), well outside the contracted
/// 0.01.
pub fn fit_growth_order(space: &SymmetricSpace, n_range: (u32, u32)) -> Result<f64> {
    let (lo, hi) = n_range;
    if lo == 0 || hi < 10 * lo {
        return Err(Error::InvalidParameter(format!(
            "growth fit needs a positive range spanning a decade, got [{lo}, {hi}]"
        )));
    }
    let points = 25usize;
    let mut ns = Vec::with_capacity(points);
    let mut ds = Vec::with_capacity(points);
    let mut last = 0u32;
    for i in 0..points {
        let frac = i as f64 / (points - 1) as f64;
        let n = ((lo as f64) * ((hi as f64) / (lo as f64)).powf(frac)).round() as u32;
        if n == last {
            continue;
        }
        last = n;
        ns.push(n as f64);
        ds.push(dim_spherical(space, n).dim);
    }
    fit_power_law(&ns, &ds, true)
        .ok_or_else(|| Error::InvalidParameter("degenerate growth-fit sample".into()))
}

/// Streaming `dim V_n` for `n = 0, 1, 2, ...` by multiplicative update,
/// used by the series evaluator where an exact big-integer per term would
/// dominate the run time. Drift is `O(n) * eps`, irrelevant to convergence
/// diagnosis.
#[derive(Debug, Clone)]
pub struct DimensionScan {
    a: f64,
    b: f64,
    next_n: u64,
    dim: f64,
}

impl DimensionScan {
    pub fn new(space: &SymmetricSpace) -> Self {
        let params = space.jacobi_params();
        DimensionScan {
            a: params.a,
            b: params.b,
            next_n: 0,
            dim: 1.0,
        }
    }

    pub fn next_value(&mut self) -> f64 {
        let n = self.next_n;
        self.next_n += 1;
        if n == 0 {
            return 1.0;
        }
        let (a, b) = (self.a, self.b);
        let m = (n - 1) as f64;
        self.dim *= (2.0 * m + a + b + 3.0) / (2.0 * m + a + b + 1.0) * (m + a + b + 1.0)
            / (m + b + 1.0)
            * (m + a + 1.0)
            / (m + 1.0);
        self.dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{list_catalog, SpaceFamily};

    fn space(f: SpaceFamily) -> SymmetricSpace {
        SymmetricSpace::new(f).unwrap()
    }

    #[test]
    fn ai_dimension_is_odd_integers() {
        let s = space(SpaceFamily::AI);
        assert_eq!(dim_spherical(&s, 0).dim, 1.0);
        assert_eq!(dim_spherical(&s, 7).dim, 15.0);
        assert_eq!(dim_spherical(&s, 1_000_000).dim, 2_000_001.0);
    }

    #[test]
    fn aiii2_dimension_is_cube() {
        let s = space(SpaceFamily::AIII(2));
        assert_eq!(dim_spherical(&s, 3).dim, 64.0);
        for n in 0..100u32 {
            let d = dim_spherical(&s, n).dim;
            assert_eq!(d, ((n as f64) + 1.0).powi(3), "n={n}");
        }
    }

    #[test]
    fn trivial_representation_has_dimension_one() {
        for s in list_catalog(6).unwrap() {
            assert_eq!(dim_spherical(&s, 0).dim, 1.0, "{s}");
        }
    }

    #[test]
    fn dimensions_are_integers_and_increasing() {
        for s in list_catalog(6).unwrap() {
            let mut prev = 0.0;
            for n in 0..=100u32 {
                let d = dim_spherical(&s, n).dim;
                assert!(d >= 1.0);
                assert!((d - d.round()).abs() <= 1e-6, "{s} n={n}: {d}");
                assert!(d > prev, "{s} n={n}");
                prev = d;
            }
        }
    }

    #[test]
    fn scan_tracks_closed_form() {
        for s in list_catalog(4).unwrap() {
            let mut scan = DimensionScan::new(&s);
            for n in 0..200u32 {
                let stream = scan.next_value();
                let exact = dim_spherical(&s, n).dim;
                assert!(
                    (stream - exact).abs() <= 1e-10 * exact,
                    "{s} n={n}: {stream} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn quadrature_oracle_examples() {
        let s = space(SpaceFamily::AI);
        let q = dim_by_quadrature(&s, 5, 128).unwrap();
        assert!((q - 11.0).abs() <= 1e-8 * 11.0, "{q}");
        let s = space(SpaceFamily::FII);
        let q = dim_by_quadrature(&s, 4, 256).unwrap();
        let d = dim_spherical(&s, 4).dim;
        assert!((q - d).abs() <= 1e-8 * d, "{q} vs {d}");
        for s in list_catalog(3).unwrap() {
            let q = dim_by_quadrature(&s, 0, 64).unwrap();
            assert!((q - 1.0).abs() <= 1e-12, "{s}: {q}");
        }
    }

    #[test]
    fn quadrature_rejects_bad_arguments() {
        let s = space(SpaceFamily::AI);
        assert!(dim_by_quadrature(&s, 51, 256).is_err());
        assert!(dim_by_quadrature(&s, 5, 70).is_err());
    }

    #[test]
    fn growth_orders_match_multiplicity_sum() {
        for (f, want) in [
            (SpaceFamily::AI, 1.0),
            (SpaceFamily::AIII(3), 5.0),
            (SpaceFamily::FII, 15.0),
        ] {
            let s = space(f);
            let got = fit_growth_order(&s, (1_000, 10_000)).unwrap();
            assert!((got - want).abs() <= 0.01, "{s}: {got}");
        }
        assert!(fit_growth_order(&space(SpaceFamily::AI), (1000, 5000)).is_err());
    }
}
