//! 1D Galerkin basis (1 - x^2)^l P_j(x) with clamped boundary behaviour of
//! order l at x = +-1, plus derivative Gram matrices.

use crate::numerics::{gauss_legendre, NumericsError, RealPolynomial};

use super::SolverError;

/// Basis phi_j(x) = (1 - x^2)^l P_j(x) on [-1, 1], with P_j Legendre.
/// Exact polynomial representations of each phi_j and its derivatives up to
/// order l are kept.
#[derive(Debug, Clone)]
pub struct GalerkinBasis1D {
    order: u32,
    size: usize,
    /// derivs[j][d] = phi_j^(d), d = 0..=l
    derivs: Vec<Vec<RealPolynomial>>,
}

impl GalerkinBasis1D {
    pub fn new(order: u32, size: usize) -> Self {
        let l = order as usize;
        // (1 - x^2)^l
        let mut weight = RealPolynomial::one();
        let factor = RealPolynomial::new(vec![1.0, 0.0, -1.0]);
        for _ in 0..l {
            weight = weight.mul(&factor);
        }
        let derivs = (0..size)
            .map(|j| {
                let phi = weight.mul(&RealPolynomial::legendre(j));
                let mut ds = Vec::with_capacity(l + 1);
                ds.push(phi);
                for d in 1..=l {
                    let next = ds[d - 1].diff();
                    ds.push(next);
                }
                ds
            })
            .collect();
        Self { order, size, derivs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// phi_j^(d) as a polynomial on the reference interval.
    pub fn derivative(&self, j: usize, d: usize) -> &RealPolynomial {
        &self.derivs[j][d]
    }

    /// Largest absolute value of phi_j^(d) at x = +-1 over d = 0..l-1,
    /// relative to the coefficient magnitude of phi_j^(d); zero (to
    /// round-off) by construction.
    pub fn boundary_trace(&self) -> f64 {
        let l = self.order as usize;
        let mut worst = 0.0_f64;
        for ds in &self.derivs {
            for d in 0..l {
                let scale = ds[d]
                    .coeffs()
                    .iter()
                    .fold(1.0_f64, |m, c| m.max(c.abs()));
                worst = worst.max(ds[d].eval(1.0).abs() / scale);
                worst = worst.max(ds[d].eval(-1.0).abs() / scale);
            }
        }
        worst
    }
}

/// G_ij = int_{-1}^{1} phi_i^(a) phi_j^(b) dx, exact via Gauss-Legendre.
pub fn derivative_gram(
    basis: &GalerkinBasis1D,
    a: usize,
    b: usize,
) -> Result<Vec<f64>, SolverError> {
    let l = basis.order() as usize;
    if a > l || b > l {
        return Err(SolverError::InvalidArgument(format!(
            "derivative orders ({a}, {b}) exceed basis order {l}"
        )));
    }
    let n = basis.size();
    if n == 0 {
        return Ok(vec![]);
    }
    // integrand degree <= (2l + n - 1 - a) + (2l + n - 1 - b)
    let deg = (2 * l + n - 1).saturating_sub(a) + (2 * l + n - 1).saturating_sub(b);
    let npts = deg / 2 + 2;
    let (nodes, weights) = gauss_legendre(npts).map_err(numerics_arg)?;
    let mut g = vec![0.0; n * n];
    // evaluate each derivative on the nodes once
    let eval = |d: usize| -> Vec<Vec<f64>> {
        (0..n)
            .map(|j| nodes.iter().map(|&x| basis.derivative(j, d).eval(x)).collect())
            .collect()
    };
    let va = eval(a);
    let vb = if a == b { va.clone() } else { eval(b) };
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for (q, w) in weights.iter().enumerate() {
                s += w * va[i][q] * vb[j][q];
            }
            g[i * n + j] = s;
        }
    }
    Ok(g)
}

/// Gram matrix on an interval of length `len`, i.e. the reference Gram
/// rescaled by the affine map [-1, 1] -> [0, len].
pub fn scaled_gram(
    basis: &GalerkinBasis1D,
    a: usize,
    b: usize,
    len: f64,
) -> Result<Vec<f64>, SolverError> {
    let g = derivative_gram(basis, a, b)?;
    let factor = (2.0 / len).powi((a + b) as i32) * (len / 2.0);
    Ok(g.into_iter().map(|v| v * factor).collect())
}

fn numerics_arg(e: NumericsError) -> SolverError {
    SolverError::InvalidArgument(e.to_string())
}
