//! Numerical evaluation and diagnosis of the Plancherel series
//! `sum_n dim V_n * prod_i |phi_n(t_i)|^2` whose convergence decides
//! square-integrability of the convolution density.
//!
//! Terms are streamed in ascending order; each dyadic block `[2^j, 2^{j+1})`
//! is accumulated with Neumaier compensation and the blocks are merged in
//! index order, so a run is bit-reproducible. The diagnosis smooths the
//! `cos^2` oscillation of the terms by fitting dyadic block means, and
//! detects the logarithmically divergent borderline (terms `~ c/n`) by a
//! separate fit of `S_N` against `log N`.

use serde::Serialize;

use crate::catalog::SymmetricSpace;
use crate::dimension::DimensionScan;
use crate::error::{Error, Result};
use crate::fit::{fit_line, fit_power_law};
use crate::jacobi::{RadialPoint, SphericalScan};
use crate::orbit::{self, SmoothnessVerdict};

/// Summation schedule: sum terms `n = 1..=n_max` and record checkpoints at
/// `N_k = ceil(ratio^k)`.
#[derive(Debug, Clone, Copy)]
pub struct SumSchedule {
    pub n_max: u64,
    pub ratio: f64,
}

impl SumSchedule {
    pub fn new(n_max: u64, ratio: f64) -> Result<Self> {
        if n_max == 0 || n_max > 10_000_000 {
            return Err(Error::InvalidParameter(format!(
                "n_max must lie in [1, 10^7], got {n_max}"
            )));
        }
        if !(ratio.is_finite() && ratio > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "checkpoint ratio must exceed 1, got {ratio}"
            )));
        }
        Ok(SumSchedule { n_max, ratio })
    }
}

/// Record of a partial-sum run.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTrace {
    /// `(N, S_N)` at the scheduled checkpoints, strictly increasing in `N`.
    pub checkpoints: Vec<(u64, f64)>,
    /// `(block index j, mean term over [2^j, 2^{j+1}) ∩ [1, n_max])`.
    pub block_means: Vec<(u32, f64)>,
    /// Sparse `(n, term)` samples taken at the checkpoint indices.
    pub terms_sampled: Vec<(u64, f64)>,
}

/// Convergence verdict for a diagnosed series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesVerdict {
    Convergent,
    Divergent,
    Inconclusive,
}

/// Diagnosis of a [`SeriesTrace`]: fitted tail exponent of the block
/// means, fitted slope of `S_N` against `log N`, and the verdict.
///
/// With margin `delta = 0.1`: `Convergent` needs `tail <= -1 - delta`;
/// `Divergent` needs `tail >= -1 + delta`, or a positive log-slope with
/// `r^2 >= 0.98`; anything else is `Inconclusive`.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesDiagnosis {
    pub verdict: SeriesVerdict,
    /// Fitted `s` in block-mean `~ c * n^s` (negative for decaying terms);
    /// absent when no positive block means were available to fit.
    pub tail_exponent: Option<f64>,
    /// Fitted slope of `S_N` versus `ln N`.
    pub log_slope: f64,
    /// Coefficient of determination of the `S_N` versus `ln N` fit.
    pub r_squared: f64,
}

const VERDICT_MARGIN: f64 = 0.1;
const LOG_SLOPE_R2_MIN: f64 = 0.98;

/// One Plancherel term `dim V_n * prod_i |phi_n(t_i)|^2` for `n >= 1`
/// (the trivial representation contributes the constant 1 and is excluded
/// from traces). Between one and three points are supported.
pub fn norm_series_term(space: &SymmetricSpace, n: u32, points: &[RadialPoint]) -> Result<f64> {
    check_points(points)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "series terms are indexed from n = 1; the n = 0 term is the constant 1".into(),
        ));
    }
    let mut stream = TermStream::new(space, points);
    let mut term = 0.0;
    for _ in 0..n {
        term = stream.next_term();
    }
    Ok(term)
}

fn check_points(points: &[RadialPoint]) -> Result<()> {
    if points.is_empty() || points.len() > 3 {
        return Err(Error::InvalidParameter(format!(
            "between 1 and 3 radial points are supported, got {}",
            points.len()
        )));
    }
    Ok(())
}

/// Streams `dim V_n * prod |phi_n(t_i)|^2` for `n = 1, 2, 3, ...` in O(1)
/// state per point.
struct TermStream {
    dims: DimensionScan,
    scans: Vec<SphericalScan>,
}

impl TermStream {
    fn new(space: &SymmetricSpace, points: &[RadialPoint]) -> Self {
        let mut dims = DimensionScan::new(space);
        let mut scans: Vec<SphericalScan> = points
            .iter()
            .map(|p| SphericalScan::new(space, *p))
            .collect();
        // discard the n = 0 values so the next pull yields n = 1
        dims.next_value();
        for s in &mut scans {
            s.next_value();
        }
        TermStream { dims, scans }
    }

    fn next_term(&mut self) -> f64 {
        let mut term = self.dims.next_value();
        for s in &mut self.scans {
            let phi = s.next_value();
            term *= phi * phi;
        }
        term
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Partial sums of the Plancherel series for one to three points.
///
/// Terms are generated in ascending order. Each dyadic block keeps its own
/// compensated sum; blocks are folded into the running total in index
/// order, so the recorded checkpoints are bit-identical across runs with
/// the same arguments.
pub fn partial_sums(
    space: &SymmetricSpace,
    points: &[RadialPoint],
    schedule: SumSchedule,
) -> Result<SeriesTrace> {
    check_points(points)?;
    let n_max = schedule.n_max;
    let mut checkpoint_ns = checkpoint_indices(schedule);
    checkpoint_ns.reverse(); // pop from the back as n advances

    let mut stream = TermStream::new(space, points);
    let mut total = CompensatedSum::default();
    let mut block = CompensatedSum::default();
    let mut block_index = 0u32;
    let mut block_start = 1u64;
    let mut block_count = 0u64;

    let mut checkpoints = Vec::new();
    let mut block_means = Vec::new();
    let mut terms_sampled = Vec::new();

    for n in 1..=n_max {
        if n == 2 * block_start {
            // fold the finished block into the total, in index order
            block_means.push((block_index, block.value() / block_count as f64));
            total.add(block.value());
            block = CompensatedSum::default();
            block_index += 1;
            block_start *= 2;
            block_count = 0;
        }
        let term = stream.next_term();
        block.add(term);
        block_count += 1;
        if checkpoint_ns.last() == Some(&n) {
            checkpoint_ns.pop();
            checkpoints.push((n, total.value() + block.value()));
            terms_sampled.push((n, term));
        }
    }
    if block_count > 0 {
        block_means.push((block_index, block.value() / block_count as f64));
    }
    Ok(SeriesTrace {
        checkpoints,
        block_means,
        terms_sampled,
    })
}

fn checkpoint_indices(schedule: SumSchedule) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 0u32;
    loop {
        let n = schedule.ratio.powi(k as i32).ceil() as u64;
        if n > schedule.n_max {
            break;
        }
        if out.last() != Some(&n) {
            out.push(n);
        }
        k += 1;
        if k > 10_000 {
            break;
        }
    }
    if out.last() != Some(&schedule.n_max) {
        out.push(schedule.n_max);
    }
    out
}

/// Diagnose a trace. Requires at least 8 dyadic blocks. Fits the last half
/// of the block means in log-log coordinates and `S_N` against `ln N` over
/// the last half of the checkpoints, then applies the verdict rule.
pub fn diagnose(trace: &SeriesTrace) -> Result<SeriesDiagnosis> {
    if trace.block_means.len() < 8 {
        return Err(Error::InvalidParameter(format!(
            "diagnosis needs at least 8 dyadic blocks, got {}",
            trace.block_means.len()
        )));
    }
    let n_max = trace.checkpoints.last().map(|(n, _)| *n).unwrap_or(0);
    let blocks = &trace.block_means;
    let half = blocks.len() / 2;
    let mut ns = Vec::new();
    let mut means = Vec::new();
    for (j, mean) in &blocks[half..] {
        // geometric centre of [2^j, 2^{j+1}), trimmed when the final block
        // ends early at n_max
        let lo = 2f64.powi(*j as i32);
        let hi = (2.0 * lo - 1.0).min(n_max as f64);
        ns.push((lo * hi).sqrt());
        means.push(*mean);
    }
    let tail_exponent = fit_power_law(&ns, &means, false);

    // S_N against ln N over the last half of the checkpoints; a sparse
    // schedule may leave too few points there, in which case all of them
    // are used
    let cks = &trace.checkpoints;
    let chalf = if cks.len() - cks.len() / 2 >= 3 { cks.len() / 2 } else { 0 };
    let xs: Vec<f64> = cks[chalf..].iter().map(|(n, _)| (*n as f64).ln()).collect();
    let ys: Vec<f64> = cks[chalf..].iter().map(|(_, s)| *s).collect();
    let line = if xs.len() >= 2 {
        fit_line(&xs, &ys)
    } else {
        crate::fit::LineFit { slope: 0.0, intercept: 0.0, r_squared: 0.0 }
    };

    let verdict = match tail_exponent {
        Some(t) if t <= -1.0 - VERDICT_MARGIN => SeriesVerdict::Convergent,
        Some(t) if t >= -1.0 + VERDICT_MARGIN => SeriesVerdict::Divergent,
        _ if line.slope > 0.0 && line.r_squared >= LOG_SLOPE_R2_MIN => SeriesVerdict::Divergent,
        _ => SeriesVerdict::Inconclusive,
    };
    Ok(SeriesDiagnosis {
        verdict,
        tail_exponent,
        log_slope: line.slope,
        r_squared: line.r_squared,
    })
}

/// Agreement report between the numerical diagnosis and the closed-form
/// verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub closed_form_l2: bool,
    pub diagnosis: SeriesDiagnosis,
    pub agree: bool,
    #[serde(skip)]
    pub verdict: SmoothnessVerdict,
    #[serde(skip)]
    pub trace: SeriesTrace,
}

/// Run `partial_sums` + `diagnose` and compare with the closed-form
/// square-integrability verdict for the same points.
pub fn crosscheck(
    space: &SymmetricSpace,
    points: &[RadialPoint],
    schedule: SumSchedule,
) -> Result<ConsistencyReport> {
    check_points(points)?;
    let (verdict, closed_form_l2) = match points {
        [p1, p2] => {
            let v = orbit::decide_pair(space, p1.t, p2.t)?;
            let l2 = v.l2;
            (v, l2)
        }
        [p1, p2, p3] => {
            let v = orbit::decide_triple(space, p1.t, p2.t, p3.t)?;
            let l2 = v.l2;
            (v, l2)
        }
        [p1] => {
            // a single orbital measure is singular; its Plancherel series
            // always diverges, square-integrability never holds
            (orbit::decide_pair(space, p1.t, p1.t)?, false)
        }
        _ => unreachable!("check_points admits 1..=3"),
    };
    let trace = partial_sums(space, points, schedule)?;
    let diagnosis = diagnose(&trace)?;
    let agree = match diagnosis.verdict {
        SeriesVerdict::Convergent => closed_form_l2,
        SeriesVerdict::Divergent => !closed_form_l2,
        SeriesVerdict::Inconclusive => false,
    };
    Ok(ConsistencyReport {
        closed_form_l2,
        diagnosis,
        agree,
        verdict,
        trace,
    })
}

/// Which classical trigonometric series to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigSeriesKind {
    /// `sum sin(nx)/n`, converging to `(pi - x)/2` on `(0, 2pi)`.
    Sine,
    /// `sum cos(nx)/n`, converging to `-log(2 sin(x/2))` on `(0, 2pi)`.
    Cosine,
}

/// Partial sum `sum_{n <= N}` of the chosen series. The tail obeys
/// `|S - S_N| <= 2/(N * dist(x, 2pi Z))`, so the partial sum is within
/// that bound (plus rounding) of the closed form.
pub fn trig_series_reference(x: f64, terms: u64, kind: TrigSeriesKind) -> Result<f64> {
    if !(0.0..2.0 * std::f64::consts::PI).contains(&x) || x == 0.0 {
        return Err(Error::Domain(format!(
            "trigonometric series argument must lie in (0, 2pi), got {x}"
        )));
    }
    if terms == 0 {
        return Err(Error::InvalidParameter("need at least one term".into()));
    }
    if kind == TrigSeriesKind::Sine && x == std::f64::consts::PI {
        // every term sin(n pi) vanishes identically
        return Ok(0.0);
    }
    let mut acc = CompensatedSum::default();
    for n in 1..=terms {
        let arg = n as f64 * x;
        let term = match kind {
            TrigSeriesKind::Sine => arg.sin(),
            TrigSeriesKind::Cosine => arg.cos(),
        } / n as f64;
        acc.add(term);
    }
    Ok(acc.value())
}

/// Closed form the series converges to on `(0, 2pi)`.
pub fn trig_series_closed_form(x: f64, kind: TrigSeriesKind) -> Result<f64> {
    if !(0.0..2.0 * std::f64::consts::PI).contains(&x) || x == 0.0 {
        return Err(Error::Domain(format!(
            "closed form defined on (0, 2pi), got {x}"
        )));
    }
    Ok(match kind {
        TrigSeriesKind::Sine => (std::f64::consts::PI - x) / 2.0,
        TrigSeriesKind::Cosine => -(2.0 * (x / 2.0).sin()).ln(),
    })
}

/// Residual of the squared-spherical-function expansion on SU(2)/SO(2):
///
/// ```text
/// n * phi_n(t)^2 * pi * sin(t) - (1 + sin((2n+1) t))
/// ```
///
/// which the interior asymptotics bound by `O(1/n)`. The normalising
/// constant `1/(pi sin t)` is the squared half-amplitude `k(t)^2/2`.
pub fn su2_expansion_residual(n: u32, t: f64) -> Result<f64> {
    const MARGIN: f64 = 1e-2;
    if !(MARGIN..=std::f64::consts::PI - MARGIN).contains(&t) {
        return Err(Error::Domain(format!(
            "expansion residual needs t in [1e-2, pi - 1e-2], got {t}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("residual needs n >= 1".into()));
    }
    let space = SymmetricSpace::new(crate::catalog::SpaceFamily::AI).expect("AI exists");
    let phi = crate::jacobi::spherical_function(&space, n, RadialPoint::new(t)).value;
    let nf = n as f64;
    Ok(nf * phi * phi * std::f64::consts::PI * t.sin() - (1.0 + ((2.0 * nf + 1.0) * t).sin()))
}
