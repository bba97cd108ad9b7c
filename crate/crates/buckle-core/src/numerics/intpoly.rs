//! Exact integer-coefficient polynomials with overflow detection.
//!
//! Coefficients are i128 with checked arithmetic; wide enough for the
//! recursion coefficients up to order 12 in dimension 10, and any overflow
//! is reported rather than wrapped.

use super::NumericsError;

/// Integer-coefficient polynomial, ascending powers, normalized so the
/// leading coefficient is nonzero (zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: i128) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> i128 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self, NumericsError> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0i128; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self
                .coeff(i)
                .checked_add(other.coeff(i))
                .ok_or(NumericsError::IntegerOverflow)?;
        }
        Ok(Self::new(coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NumericsError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NumericsError> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(*b).ok_or(NumericsError::IntegerOverflow)?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .ok_or(NumericsError::IntegerOverflow)?;
            }
        }
        Ok(Self::new(coeffs))
    }

    /// Multiply by x.
    pub fn times_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Evaluate at a real point (coefficients converted to f64).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }
}
