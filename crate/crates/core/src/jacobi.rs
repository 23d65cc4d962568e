//! Jacobi polynomials and spherical functions of rank-one spaces.
//!
//! The spherical function of the representation with restricted highest
//! weight `n*beta` is the normalised Jacobi polynomial
//!
//! ```text
//! phi_n(t) = Gamma(n+1) Gamma(a+1) / Gamma(a+n+1) * P_n^{(a,b)}(cos beta(Z))
//! ```
//!
//! with `(a, b)` the space's exponent pair and `beta(Z) = t` or `2t`
//! depending on the root kind. Three independent evaluation routes are
//! provided and cross-checked in tests:
//!
//!  * the upward three-term recurrence (`jacobi_recurrence`), the fast path,
//!    stable in the oscillatory region `|x| < 1`;
//!  * the terminating hypergeometric sum (`jacobi_via_2f1`,
//!    `spherical_function_hypergeometric`), evaluated in exact rational
//!    arithmetic — the alternating sum loses ~`2n sqrt(2s)/ln 10` decimal
//!    digits to cancellation, which exceeds f64 precision already at
//!    `n ≈ 20`, so floats are not an option here;
//!  * an exact rational expansion around `x = 1` (`jacobi_exact`) for
//!    rational arguments.
//!
//! Endpoint values use the closed binomial forms directly: at `x = -1` the
//! forward recurrence tracks a solution that is dominated by the second
//! solution of the three-term relation, so recurring there would lose a
//! factor `n^{a-b}` of accuracy.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use statrs::function::gamma::ln_gamma;

use crate::catalog::{JacobiParams, SymmetricSpace};
use crate::error::{Error, Result};

/// Canonical radial coordinate `t = alpha(Z)` of a double-coset
/// representative `z = exp(iZ)`. Any real value is accepted; evaluation
/// depends on `t` only through `cos beta(Z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPoint {
    pub t: f64,
}

impl RadialPoint {
    pub fn new(t: f64) -> Self {
        RadialPoint { t }
    }
}

/// Interior asymptotic approximation of `P_n^{(a,b)}(cos theta)`:
/// `k(theta) n^{-1/2} cos(N theta + gamma)` with `N = n + (a+b+1)/2`,
/// `gamma = -(pi/2)(a + 1/2)` and
/// `k(theta) = pi^{-1/2} sin(theta/2)^{-a-1/2} cos(theta/2)^{-b-1/2}`.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticApprox {
    pub value: f64,
    /// `k(theta) n^{-1/2}`, the oscillation envelope.
    pub envelope: f64,
    /// Effective frequency `N`.
    pub freq: f64,
    pub gamma: f64,
    pub k_theta: f64,
}

/// A spherical-function value together with the log of its normalising
/// prefactor `Gamma(n+1)Gamma(a+1)/Gamma(a+n+1)`.
#[derive(Debug, Clone, Copy)]
pub struct SphericalValue {
    pub n: u32,
    pub value: f64,
    pub prefactor_log: f64,
}

const DOMAIN_SLACK: f64 = 1e-12;

fn check_domain(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 + DOMAIN_SLACK {
        return Err(Error::Domain(format!(
            "jacobi argument must lie in [-1, 1] (tolerance 1e-12), got {x}"
        )));
    }
    Ok(x.clamp(-1.0, 1.0))
}

/// Generalised binomial `binom(n+s, n)` as the product of `(s+k)/k`.
/// Exact to a few ulp for the moderate `n` used on endpoint paths.
pub fn binom_general(s: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 1..=n as u64 {
        acc *= (s + k as f64) / k as f64;
    }
    acc
}

/// `P_n^{(a,b)}(x)` by upward three-term recurrence from `P_0 = 1` and the
/// degree-1 polynomial. Endpoints `x = ±1` take the closed binomial forms.
pub fn jacobi_recurrence(n: u32, params: &JacobiParams, x: f64) -> Result<f64> {
    let x = check_domain(x)?;
    if x == 1.0 {
        return Ok(binom_general(params.a, n));
    }
    if x == -1.0 {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        return Ok(sign * binom_general(params.b, n));
    }
    let mut scan = JacobiScan::new(*params, x);
    let mut value = scan.next_value();
    for _ in 0..n {
        value = scan.next_value();
    }
    Ok(value)
}

/// Streaming evaluation of `P_0(x), P_1(x), P_2(x), ...` at a fixed
/// argument: one recurrence step per call, `O(1)` state.
#[derive(Debug, Clone)]
pub struct JacobiScan {
    a: f64,
    b: f64,
    x: f64,
    next_n: u64,
    p_prev: f64,
    p_curr: f64,
}

impl JacobiScan {
    pub fn new(params: JacobiParams, x: f64) -> Self {
        JacobiScan {
            a: params.a,
            b: params.b,
            x,
            next_n: 0,
            p_prev: 0.0,
            p_curr: 0.0,
        }
    }

    /// Value of `P_n` for the next `n` in sequence (starting at `n = 0`).
    pub fn next_value(&mut self) -> f64 {
        let (a, b, x) = (self.a, self.b, self.x);
        let value = match self.next_n {
            0 => 1.0,
            1 => (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0,
            n => {
                let nf = n as f64;
                let s = 2.0 * nf + a + b;
                let c1 = 2.0 * nf * (nf + a + b) * (s - 2.0);
                let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
                let c3 = 2.0 * (nf + a - 1.0) * (nf + b - 1.0) * s;
                (c2 * self.p_curr - c3 * self.p_prev) / c1
            }
        };
        self.p_prev = self.p_curr;
        self.p_curr = value;
        self.next_n += 1;
        value
    }
}

/// Streaming evaluation of the spherical function `phi_n(t)` for
/// `n = 0, 1, 2, ...` at a fixed point. The prefactor is updated
/// multiplicatively; endpoint arguments use the exact binomial ratios.
#[derive(Debug, Clone)]
pub struct SphericalScan {
    kind: ScanKind,
    next_n: u64,
}

#[derive(Debug, Clone)]
enum ScanKind {
    /// `cos beta(Z) = 1`: phi is identically one.
    Top,
    /// `cos beta(Z) = -1`: `phi_n = (-1)^n prod_{k<=n} (b+k)/(a+k)`.
    Bottom { a: f64, b: f64, magnitude: f64 },
    Interior {
        scan: JacobiScan,
        a: f64,
        prefactor: f64,
    },
}

impl SphericalScan {
    pub fn new(space: &SymmetricSpace, point: RadialPoint) -> Self {
        let params = space.jacobi_params();
        let x = space.beta_angle(point.t).cos();
        let kind = if x == 1.0 {
            ScanKind::Top
        } else if x == -1.0 {
            ScanKind::Bottom {
                a: params.a,
                b: params.b,
                magnitude: 1.0,
            }
        } else {
            ScanKind::Interior {
                scan: JacobiScan::new(params, x),
                a: params.a,
                prefactor: 1.0,
            }
        };
        SphericalScan { kind, next_n: 0 }
    }

    /// `phi_n` for the next `n` in sequence (starting at `n = 0`).
    pub fn next_value(&mut self) -> f64 {
        let n = self.next_n;
        self.next_n += 1;
        match &mut self.kind {
            ScanKind::Top => 1.0,
            ScanKind::Bottom { a, b, magnitude } => {
                if n > 0 {
                    *magnitude *= (*b + n as f64) / (*a + n as f64);
                }
                if n.is_multiple_of(2) {
                    *magnitude
                } else {
                    -*magnitude
                }
            }
            ScanKind::Interior { scan, a, prefactor } => {
                if n > 0 {
                    *prefactor *= n as f64 / (*a + n as f64);
                }
                *prefactor * scan.next_value()
            }
        }
    }
}

/// Exact value of the terminating sum
/// `2F1(-n, n+a+b+1; a+1; s) = sum_k (-n)_k (n+a+b+1)_k / ((a+1)_k k!) s^k`
/// over the rationals. `two_a` and `two_b` are `2a` and `2b`.
///
/// The accumulator and the running term share one unreduced denominator,
/// so each step is two big-by-small multiplications and an addition; a
/// per-term gcd would dominate the cost of the oracle grid.
fn hyp2f1_terminating(n: u32, two_a: i64, two_b: i64, s: &BigRational) -> BigRational {
    let n_i = n as i64;
    let mut total = BigInt::one();
    let mut term = BigInt::one();
    let mut denom = BigInt::one();
    for k in 0..n_i {
        // ratio T_{k+1}/T_k = (k-n)(n+a+b+1+k) / ((a+1+k)(k+1)) * s; with the
        // doubled parameters the two halves cancel:
        // (k-n)(2n+2k+2+2a+2b) / ((2a+2+2k)(k+1)) * s
        let rn =
            BigInt::from(k - n_i) * BigInt::from(2 * n_i + 2 * k + 2 + two_a + two_b) * s.numer();
        let rd = BigInt::from(two_a + 2 + 2 * k) * BigInt::from(k + 1) * s.denom();
        total *= &rd;
        denom *= rd;
        term *= rn;
        total += &term;
    }
    BigRational::new(total, denom)
}

/// Convert a big rational to the nearest `f64` (relative error below
/// `2^-61`). `BigRational::to_f64` overflows on numerators beyond the f64
/// range, which these sums routinely produce.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let mut num = r.numer().abs().into_parts().1;
    let mut den = r.denom().abs().into_parts().1;
    let shift = num.bits() as i64 - den.bits() as i64 - 63;
    if shift > 0 {
        den <<= shift as u64;
    } else {
        num <<= (-shift) as u64;
    }
    let q = (num / den).to_f64().unwrap_or(f64::INFINITY);
    let mag = q * 2f64.powi(shift.clamp(-2000, 2000) as i32);
    if negative {
        -mag
    } else {
        mag
    }
}

fn dyadic(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float converts exactly")
}

fn doubled_params(params: &JacobiParams) -> Result<(i64, i64)> {
    params.doubled_integers().ok_or_else(|| {
        Error::InvalidParameter(format!(
            "exact evaluation needs 2a and 2b integral, got a={}, b={}",
            params.a, params.b
        ))
    })
}

const MAX_HYPERGEOMETRIC_DEGREE: u32 = 200;

/// `P_n^{(a,b)}(x)` through the terminating-2F1 identity with the Gamma
/// prefactor, an oracle independent of the recurrence. The sum runs in
/// exact rational arithmetic on the dyadic rational `(1-x)/2`; only the
/// final value is rounded.
pub fn jacobi_via_2f1(n: u32, params: &JacobiParams, x: f64) -> Result<f64> {
    if n > MAX_HYPERGEOMETRIC_DEGREE {
        return Err(Error::Range(format!(
            "terminating 2F1 path supports n <= {MAX_HYPERGEOMETRIC_DEGREE}, got {n}"
        )));
    }
    let x = check_domain(x)?;
    let (two_a, two_b) = doubled_params(params)?;
    let s = dyadic((1.0 - x) / 2.0);
    let sum = hyp2f1_terminating(n, two_a, two_b, &s);
    // prefactor Gamma(a+n+1)/(Gamma(n+1)Gamma(a+1)) = (a+1)_n / n!
    let mut prefactor = BigRational::one();
    for k in 1..=n as i64 {
        prefactor *= BigRational::new(BigInt::from(two_a + 2 * k), BigInt::from(2 * k));
    }
    Ok(rational_to_f64(&(prefactor * sum)))
}

const MAX_EXACT_DEGREE: u32 = 20;

/// Exact rational `P_n^{(a,b)}(x)` for rational `x` and half-integral
/// parameters, via the expansion around `x = 1`:
/// `P_n = sum_l (n+a+b+1)_l (a+l+1)_{n-l} / (l! (n-l)!) ((x-1)/2)^l`.
/// Structurally different from the 2F1 route, so the two exact paths do
/// not share a bug.
pub fn jacobi_exact(n: u32, params: &JacobiParams, x: &BigRational) -> Result<BigRational> {
    if n > MAX_EXACT_DEGREE {
        return Err(Error::Range(format!(
            "exact rational path supports n <= {MAX_EXACT_DEGREE}, got {n}"
        )));
    }
    let (two_a, two_b) = doubled_params(params)?;
    let half = |num: i64| BigRational::new(BigInt::from(num), BigInt::from(2));
    let a = half(two_a);
    let b = half(two_b);
    let pochhammer = |start: &BigRational, len: u32| -> BigRational {
        let mut acc = BigRational::one();
        for i in 0..len as i64 {
            acc *= start + BigRational::from(BigInt::from(i));
        }
        acc
    };
    let y = (x - BigRational::one()) / BigRational::from(BigInt::from(2));
    let mut total = BigRational::zero();
    let mut y_pow = BigRational::one();
    let mut factorial_l = BigRational::one();
    for l in 0..=n {
        if l > 0 {
            factorial_l *= BigRational::from(BigInt::from(l as i64));
            y_pow *= &y;
        }
        let mut factorial_rest = BigRational::one();
        for i in 1..=(n - l) as i64 {
            factorial_rest *= BigRational::from(BigInt::from(i));
        }
        let rising_front = pochhammer(
            &(&a + &b + BigRational::from(BigInt::from(n as i64 + 1))),
            l,
        );
        let rising_back = pochhammer(&(&a + BigRational::from(BigInt::from(l as i64 + 1))), n - l);
        total += rising_front * rising_back / (&factorial_l * factorial_rest) * &y_pow;
    }
    Ok(total)
}

const THETA_MARGIN: f64 = 1e-3;

/// Interior asymptotic approximation (valid away from the endpoints; the
/// amplitude `k(theta)` blows up there, so arguments outside
/// `[1e-3, pi - 1e-3]` are refused).
pub fn jacobi_asymptotic(n: u32, params: &JacobiParams, theta: f64) -> Result<AsymptoticApprox> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "asymptotic approximation needs n >= 1".into(),
        ));
    }
    if !(THETA_MARGIN..=std::f64::consts::PI - THETA_MARGIN).contains(&theta) {
        return Err(Error::Domain(format!(
            "asymptotic form is an interior estimate; theta must lie in [1e-3, pi - 1e-3], got {theta}"
        )));
    }
    let (a, b) = (params.a, params.b);
    let freq = n as f64 + (a + b + 1.0) / 2.0;
    let gamma = -std::f64::consts::FRAC_PI_2 * (a + 0.5);
    let k_theta = (std::f64::consts::PI).powf(-0.5)
        * (theta / 2.0).sin().powf(-a - 0.5)
        * (theta / 2.0).cos().powf(-b - 0.5);
    let envelope = k_theta * (n as f64).powf(-0.5);
    Ok(AsymptoticApprox {
        value: envelope * (freq * theta + gamma).cos(),
        envelope,
        freq,
        gamma,
        k_theta,
    })
}

/// Spherical function `phi_n` at a radial point. The value at the identity
/// is exactly one: the prefactor cancels `P_n(1)` in closed form, so the
/// `cos beta(Z) = 1` branch never touches the recurrence.
///
/// ```
/// use rankone::catalog::{SpaceFamily, SymmetricSpace};
/// use rankone::jacobi::{spherical_function, RadialPoint};
///
/// let fii = SymmetricSpace::new(SpaceFamily::FII).unwrap();
/// assert_eq!(spherical_function(&fii, 1000, RadialPoint::new(0.0)).value, 1.0);
/// let v = spherical_function(&fii, 17, RadialPoint::new(0.9)).value;
/// assert!(v.abs() <= 1.0);
/// ```
pub fn spherical_function(space: &SymmetricSpace, n: u32, point: RadialPoint) -> SphericalValue {
    let params = space.jacobi_params();
    let (a, b) = (params.a, params.b);
    let nf = n as f64;
    let prefactor_log = ln_gamma(nf + 1.0) + ln_gamma(a + 1.0) - ln_gamma(a + nf + 1.0);
    let x = space.beta_angle(point.t).cos();
    let value = if x == 1.0 {
        1.0
    } else if x == -1.0 {
        let mut magnitude = 1.0;
        for k in 1..=n as u64 {
            magnitude *= (b + k as f64) / (a + k as f64);
        }
        if n.is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        }
    } else {
        let p = jacobi_recurrence(n, &params, x).expect("cosine lies in [-1, 1]");
        prefactor_log.exp() * p
    };
    SphericalValue {
        n,
        value,
        prefactor_log,
    }
}

/// Spherical function through its hypergeometric form
/// `2F1(n+a+b+1, -n; a+1; sin^2(beta(Z)/2))`, the second, algebraically
/// identical route. Exact rational summation as in [`jacobi_via_2f1`].
pub fn spherical_function_hypergeometric(
    space: &SymmetricSpace,
    n: u32,
    point: RadialPoint,
) -> Result<f64> {
    if n > MAX_HYPERGEOMETRIC_DEGREE {
        return Err(Error::Range(format!(
            "hypergeometric path supports n <= {MAX_HYPERGEOMETRIC_DEGREE}, got {n}"
        )));
    }
    let params = space.jacobi_params();
    let (two_a, two_b) = doubled_params(&params)?;
    let half_theta = space.beta_angle(point.t) / 2.0;
    let s = dyadic(half_theta.sin().powi(2));
    Ok(rational_to_f64(&hyp2f1_terminating(n, two_a, two_b, &s)))
}
