//! Gauss-Legendre quadrature on [-1, 1].

use super::NumericsError;

/// Evaluate the Legendre polynomial P_n and its derivative at `x`.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for j in 2..=n {
        let jf = j as f64;
        let p_next = ((2.0 * jf - 1.0) * x * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Nodes and weights of the `npts`-point Gauss-Legendre rule on [-1, 1].
///
/// Exact for polynomials of degree <= 2*npts - 1. Nodes are found by Newton
/// iteration from the cosine initial guess, to 1e-15.
pub fn gauss_legendre(npts: usize) -> Result<(Vec<f64>, Vec<f64>), NumericsError> {
    if npts == 0 {
        return Err(NumericsError::InvalidArgument(
            "quadrature rule needs at least one point".into(),
        ));
    }
    let n = npts;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n / 2;
    for i in 0..half {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        let (_, dp) = legendre_pair(n, 0.0);
        nodes[half] = 0.0;
        weights[half] = 2.0 / (dp * dp);
    }
    Ok((nodes, weights))
}

/// Integrate `f` over [a, b] with an `npts`-point rule mapped from [-1, 1].
pub fn integrate<F: Fn(f64) -> f64>(npts: usize, a: f64, b: f64, f: F) -> Result<f64, NumericsError> {
    let (nodes, weights) = gauss_legendre(npts)?;
    let mid = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += w * f(mid + hw * x);
    }
    Ok(acc * hw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_is_midpoint() {
        let (x, w) = gauss_legendre(1).unwrap();
        assert_eq!(x, vec![0.0]);
        assert_eq!(w, vec![2.0]);
    }

    #[test]
    fn two_point_rule() {
        let (x, w) = gauss_legendre(2).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((x[0] + r).abs() < 1e-13 && (x[1] - r).abs() < 1e-13);
        assert!((w[0] - 1.0).abs() < 1e-13 && (w[1] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn three_point_rule() {
        let (x, w) = gauss_legendre(3).unwrap();
        let r = (3.0_f64 / 5.0).sqrt();
        assert!((x[0] + r).abs() < 1e-13);
        assert!(x[1].abs() < 1e-13);
        assert!((x[2] - r).abs() < 1e-13);
        assert!((w[0] - 5.0 / 9.0).abs() < 1e-13);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-13);
        assert!((w[2] - 5.0 / 9.0).abs() < 1e-13);
    }

    #[test]
    fn zero_points_rejected() {
        assert!(gauss_legendre(0).is_err());
    }

    #[test]
    fn integrates_monomials_exactly() {
        // exact moment: int_{-1}^{1} x^p dx = 0 (p odd), 2/(p+1) (p even)
        for n in 1..=32 {
            let (nodes, weights) = gauss_legendre(n).unwrap();
            for p in 0..2 * n {
                let got: f64 = nodes
                    .iter()
                    .zip(weights.iter())
                    .map(|(x, w)| w * x.powi(p as i32))
                    .sum();
                let want = if p % 2 == 1 { 0.0 } else { 2.0 / (p as f64 + 1.0) };
                assert!(
                    (got - want).abs() < 1e-13,
                    "n={n} p={p}: got {got}, want {want}"
                );
            }
        }
    }
}
