//! Least-squares helpers for rate and slope estimation.
//!
//! Power-law exponents are read off from log-log regressions. A finite
//! sample range makes the plain two-parameter fit systematically biased by
//! the `O(1/n)` corrections every asymptotic here carries, so the power-law
//! fit optionally includes a `1/n` nuisance regressor; the reported exponent
//! is still the coefficient of `log n`.

/// Result of a straight-line fit `y ~ intercept + slope * x`.
#[derive(Debug, Clone, Copy)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Ordinary least squares for `y ~ a + b*x`, with the coefficient of
/// determination of the fit.
pub fn fit_line(x: &[f64], y: &[f64]) -> LineFit {
    assert_eq!(x.len(), y.len());
    assert!(x.len() >= 2, "need at least two points for a line fit");
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let det = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sy - slope * sx) / n;
    let mean_y = sy / n;
    let ss_tot: f64 = y.iter().map(|v| (v - mean_y).powi(2)).sum();
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - intercept - slope * a).powi(2))
        .sum();
    let r_squared = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else {
        1.0
    };
    LineFit {
        slope,
        intercept,
        r_squared,
    }
}

/// Fitted exponent `s` of `y ~ c * n^s`, from least squares of `log y`
/// against `[1, log n]` or `[1, log n, 1/n]` when `inverse_correction` is
/// set. Points with non-positive `y` are skipped (they carry no log).
pub fn fit_power_law(ns: &[f64], ys: &[f64], inverse_correction: bool) -> Option<f64> {
    assert_eq!(ns.len(), ys.len());
    let pts: Vec<(f64, f64)> = ns
        .iter()
        .zip(ys)
        .filter(|(n, y)| **n > 0.0 && **y > 0.0)
        .map(|(n, y)| (*n, *y))
        .collect();
    let min_pts = if inverse_correction { 4 } else { 3 };
    if pts.len() < min_pts {
        return None;
    }
    if inverse_correction {
        let rows: Vec<[f64; 3]> = pts.iter().map(|(n, _)| [1.0, n.ln(), 1.0 / n]).collect();
        let y: Vec<f64> = pts.iter().map(|(_, v)| v.ln()).collect();
        solve_normal_equations_3(&rows, &y).map(|c| c[1])
    } else {
        let x: Vec<f64> = pts.iter().map(|(n, _)| n.ln()).collect();
        let y: Vec<f64> = pts.iter().map(|(_, v)| v.ln()).collect();
        Some(fit_line(&x, &y).slope)
    }
}

/// Solve the 3-column least-squares problem via its normal equations with
/// Gaussian elimination and partial pivoting. Returns `None` on a singular
/// system (collinear design).
fn solve_normal_equations_3(rows: &[[f64; 3]], y: &[f64]) -> Option<[f64; 3]> {
    let mut ata = [[0.0f64; 3]; 3];
    let mut aty = [0.0f64; 3];
    for (r, v) in rows.iter().zip(y) {
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += r[i] * r[j];
            }
            aty[i] += r[i] * v;
        }
    }
    let mut m = [[0.0f64; 4]; 3];
    for i in 0..3 {
        m[i][..3].copy_from_slice(&ata[i]);
        m[i][3] = aty[i];
    }
    for col in 0..3 {
        let pivot =
            (col..3).max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())?;
        if m[pivot][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..3 {
            if row != col {
                let f = m[row][col] / m[col][col];
                let pivot_row = m[col];
                for (cell, p) in m[row][col..4].iter_mut().zip(&pivot_row[col..4]) {
                    *cell -= f * p;
                }
            }
        }
    }
    Some([m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]])
}

/// Indices `n` in `[lo, values.len()-2]` where `|values[n]|` is a local
/// maximum, paired with that magnitude. Used to trace oscillation envelopes.
pub fn local_maxima(values: &[f64], lo: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let v: Vec<f64> = values.iter().map(|x| x.abs()).collect();
    for n in lo.max(1)..v.len().saturating_sub(1) {
        if v[n] >= v[n - 1] && v[n] >= v[n + 1] && v[n] > 0.0 {
            out.push((n as f64, v[n]));
        }
    }
    out
}

/// Maximum of `|values[n]|` over each dyadic block `[2^j, 2^{j+1})`
/// intersected with `[lo, values.len())`, reported at the block's argmax.
pub fn dyadic_block_maxima(values: &[f64], lo: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut start = lo.max(1);
    while start < values.len() {
        let end = (2 * start).min(values.len());
        let mut best = (start, 0.0f64);
        for (n, v) in values.iter().enumerate().take(end).skip(start) {
            if v.abs() > best.1 {
                best = (n, v.abs());
            }
        }
        if best.1 > 0.0 {
            out.push((best.0 as f64, best.1));
        }
        start = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_fit_recovers_exact_line() {
        let x: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 - 2.0 * v).collect();
        let f = fit_line(&x, &y);
        assert!((f.slope + 2.0).abs() < 1e-12);
        assert!((f.intercept - 3.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn power_law_fit_recovers_exponent_with_correction() {
        let ns: Vec<f64> = (0..100).map(|i| 100.0 * 1.05f64.powi(i)).collect();
        // y = 5 n^{-2.5} (1 + 3/n): the 1/n regressor absorbs the correction.
        let ys: Vec<f64> = ns
            .iter()
            .map(|n| 5.0 * n.powf(-2.5) * (1.0 + 3.0 / n))
            .collect();
        let plain = fit_power_law(&ns, &ys, false).unwrap();
        let corrected = fit_power_law(&ns, &ys, true).unwrap();
        assert!((corrected + 2.5).abs() < 1e-3, "corrected={corrected}");
        assert!((corrected + 2.5).abs() < (plain + 2.5).abs());
    }

    #[test]
    fn block_maxima_cover_range() {
        let vals: Vec<f64> = (0..1000).map(|n| (n as f64 * 0.37).sin()).collect();
        let blocks = dyadic_block_maxima(&vals, 16);
        assert!(blocks.len() >= 5);
        assert!(blocks.iter().all(|&(_, v)| v > 0.0));
    }
}
