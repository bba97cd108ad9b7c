//! Real-coefficient univariate polynomials, ascending powers.

/// Polynomial with real coefficients in ascending powers. Trailing zeros
/// are trimmed so the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1.0] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(p, c)| p as f64 * c)
            .collect();
        Self::new(coeffs)
    }

    /// n-th derivative.
    pub fn diff_n(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.diff();
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs.get(i).unwrap_or(&0.0) + other.coeffs.get(i).unwrap_or(&0.0);
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^n.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0.0; n];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Divide by x^n; panics if any lower coefficient is nonzero.
    pub fn shift_down(&self, n: usize) -> Self {
        for c in self.coeffs.iter().take(n) {
            assert_eq!(*c, 0.0, "polynomial not divisible by x^{n}");
        }
        if self.coeffs.len() <= n {
            return Self::zero();
        }
        Self::new(self.coeffs[n..].to_vec())
    }

    /// Legendre polynomial P_n via the three-term recurrence.
    pub fn legendre(n: usize) -> Self {
        let mut p_prev = Self::one();
        if n == 0 {
            return p_prev;
        }
        let x = Self::new(vec![0.0, 1.0]);
        let mut p = x.clone();
        for j in 2..=n {
            let jf = j as f64;
            let next = x
                .mul(&p)
                .scale((2.0 * jf - 1.0) / jf)
                .add(&p_prev.scale(-(jf - 1.0) / jf));
            p_prev = p;
            p = next;
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_of_one_plus_x_sq() {
        let p = RealPolynomial::new(vec![1.0, 0.0, 1.0]);
        assert_eq!(p.diff().coeffs(), &[0.0, 2.0]);
    }

    #[test]
    fn product_of_conjugates() {
        let a = RealPolynomial::new(vec![1.0, -1.0]);
        let b = RealPolynomial::new(vec![1.0, 1.0]);
        assert_eq!(a.mul(&b).coeffs(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn eval_direct() {
        let p = RealPolynomial::new(vec![8.0, -12.0, 1.0]);
        assert_eq!(p.eval(1.0), -3.0);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(RealPolynomial::new(vec![0.0]).is_zero());
    }

    #[test]
    fn legendre_low_orders() {
        assert_eq!(RealPolynomial::legendre(0).coeffs(), &[1.0]);
        assert_eq!(RealPolynomial::legendre(1).coeffs(), &[0.0, 1.0]);
        let p2 = RealPolynomial::legendre(2);
        assert!((p2.eval(1.0) - 1.0).abs() < 1e-15);
        assert!((p2.eval(0.0) + 0.5).abs() < 1e-15);
        // P_5(1) = 1, orthogonality spot check against P_3
        let p5 = RealPolynomial::legendre(5);
        assert!((p5.eval(1.0) - 1.0).abs() < 1e-12);
    }
}
