//! Fixed-node Gauss–Legendre quadrature on [-1, 1].
//!
//! Nodes are the roots of the Legendre polynomial `P_m`, found by Newton
//! iteration from the Tricomi initial guess; weights are
//! `2 / ((1 - x^2) P_m'(x)^2)`. Deterministic: no randomness, fixed
//! iteration count cap, left-to-right node order.

/// Nodes and weights of the `m`-point Gauss–Legendre rule.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "quadrature needs at least one node");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m {
        // initial guess for the i-th root (descending), then refined
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                let (_, d) = legendre_with_derivative(m, x);
                dp = d;
                break;
            }
        }
        nodes[m - 1 - i] = x;
        weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// `(P_m(x), P_m'(x))` by the Legendre three-term recurrence.
fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let d = m as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        // m nodes are exact through degree 2m-1
        let (x, w) = gauss_legendre(6);
        let integral: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(10)).sum();
        assert!((integral - 2.0 / 11.0).abs() < 1e-14, "{integral}");
        let odd: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(7)).sum();
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for m in [1usize, 2, 17, 128, 301] {
            let (_, w) = gauss_legendre(m);
            let total: f64 = w.iter().sum();
            assert!((total - 2.0).abs() < 1e-12, "m={m}: {total}");
        }
    }

    #[test]
    fn nodes_are_sorted_and_interior() {
        let (x, _) = gauss_legendre(40);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(x.iter().all(|v| v.abs() < 1.0));
    }
}
