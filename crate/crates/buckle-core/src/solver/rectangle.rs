//! Tensor-product assembly for intervals and rectangles.
//!
//! The order-k quadratic form is
//!   even k:  int (Delta^{k/2} u) (Delta^{k/2} v)
//!   odd k:   int < grad Delta^{(k-1)/2} u, grad Delta^{(k-1)/2} v >
//! expanded over the tensor basis via the multinomial expansion of the
//! iterated Laplacian; every factor reduces to a 1D derivative Gram block.

use crate::numerics::DenseSymMatrix;

use super::basis::{scaled_gram, GalerkinBasis1D};
use super::{AssembledForms, SolverError};

pub const MAX_BASIS_1D: usize = 40;

/// Multi-indices alpha in N^dim with |alpha| = p, paired with the
/// multinomial coefficient p! / prod(alpha_d!).
fn multinomial_indices(dim: usize, p: usize) -> Vec<(Vec<usize>, f64)> {
    fn fact(n: usize) -> f64 {
        (1..=n).map(|v| v as f64).product()
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; dim];
    fn rec(d: usize, left: usize, idx: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, f64)>, p: usize) {
        if d + 1 == idx.len() {
            idx[d] = left;
            let denom: f64 = idx.iter().map(|&a| (1..=a).map(|v| v as f64).product::<f64>()).product();
            out.push((idx.clone(), (1..=p).map(|v| v as f64).product::<f64>() / denom));
            return;
        }
        for a in 0..=left {
            idx[d] = a;
            rec(d + 1, left - a, idx, out, p);
        }
    }
    if dim == 0 {
        return out;
    }
    let _ = fact; // single definition used inside rec
    rec(0, p, &mut idx, &mut out, p);
    out
}

/// Per-axis Gram blocks for derivative orders 0..=l, scaled to the axis
/// lengths.
struct AxisGrams {
    n: usize,
    // grams[axis][a][b] is an n*n block
    grams: Vec<Vec<Vec<Vec<f64>>>>,
}

impl AxisGrams {
    fn build(basis: &GalerkinBasis1D, sides: &[f64]) -> Result<Self, SolverError> {
        let l = basis.order() as usize;
        let n = basis.size();
        let mut grams = Vec::with_capacity(sides.len());
        for &len in sides {
            let mut per_axis = vec![vec![Vec::new(); l + 1]; l + 1];
            for a in 0..=l {
                for b in a..=l {
                    let g = scaled_gram(basis, a, b, len)?;
                    per_axis[a][b] = g.clone();
                    if a != b {
                        // int f^(b) g^(a) is the transpose block
                        let mut t = vec![0.0; n * n];
                        for i in 0..n {
                            for j in 0..n {
                                t[i * n + j] = g[j * n + i];
                            }
                        }
                        per_axis[b][a] = t;
                    }
                }
            }
            grams.push(per_axis);
        }
        Ok(Self { n, grams })
    }

    #[inline]
    fn get(&self, axis: usize, a: usize, b: usize, i: usize, j: usize) -> f64 {
        self.grams[axis][a][b][i * self.n + j]
    }
}

/// Assemble the order-k form over the tensor basis on a box with the given
/// side lengths. k = 1 is the Dirichlet form, k = l the leading form.
pub fn tensor_form(
    basis: &GalerkinBasis1D,
    sides: &[f64],
    k: usize,
) -> Result<DenseSymMatrix, SolverError> {
    let dim = sides.len();
    let n = basis.size();
    let total = n.pow(dim as u32);
    let grams = AxisGrams::build(basis, sides)?;

    // decode a flat tensor index into per-axis indices
    let decode = |mut flat: usize| -> Vec<usize> {
        let mut out = vec![0usize; dim];
        for d in (0..dim).rev() {
            out[d] = flat % n;
            flat /= n;
        }
        out
    };
    let idx: Vec<Vec<usize>> = (0..total).map(decode).collect();

    // terms: (coefficient, per-axis derivative orders for u and v)
    let mut terms: Vec<(f64, Vec<(usize, usize)>)> = Vec::new();
    if k % 2 == 0 {
        let p = k / 2;
        let alphas = multinomial_indices(dim, p);
        for (alpha, ca) in &alphas {
            for (beta, cb) in &alphas {
                let orders = (0..dim).map(|d| (2 * alpha[d], 2 * beta[d])).collect();
                terms.push((ca * cb, orders));
            }
        }
    } else {
        let p = (k - 1) / 2;
        let alphas = multinomial_indices(dim, p);
        for grad_d in 0..dim {
            for (alpha, ca) in &alphas {
                for (beta, cb) in &alphas {
                    let orders = (0..dim)
                        .map(|d| {
                            let extra = if d == grad_d { 1 } else { 0 };
                            (2 * alpha[d] + extra, 2 * beta[d] + extra)
                        })
                        .collect();
                    terms.push((ca * cb, orders));
                }
            }
        }
    }

    let mut data = vec![0.0; total * total];
    for ii in 0..total {
        for jj in 0..total {
            let mut s = 0.0;
            for (coeff, orders) in &terms {
                let mut prod = *coeff;
                for (d, &(a, b)) in orders.iter().enumerate() {
                    prod *= grams.get(d, a, b, idx[ii][d], idx[jj][d]);
                    if prod == 0.0 {
                        break;
                    }
                }
                s += prod;
            }
            data[ii * total + jj] = s;
        }
    }
    DenseSymMatrix::new(total, data).map_err(|e| SolverError::Assembly(e.to_string()))
}

/// Leading and Dirichlet forms on a rectangle (dimension 2 or 3).
pub fn assemble_rectangle(
    order: u32,
    sides: &[f64],
    basis_size: usize,
) -> Result<AssembledForms, SolverError> {
    if !(sides.len() == 2 || sides.len() == 3) {
        return Err(SolverError::InvalidArgument(format!(
            "rectangle dimension {} outside {{2, 3}}",
            sides.len()
        )));
    }
    assemble_box(order, sides, basis_size)
}

/// Same assembly for an interval (dimension 1).
pub fn assemble_interval(
    order: u32,
    length: f64,
    basis_size: usize,
) -> Result<AssembledForms, SolverError> {
    assemble_box(order, &[length], basis_size)
}

pub(crate) fn assemble_box(
    order: u32,
    sides: &[f64],
    basis_size: usize,
) -> Result<AssembledForms, SolverError> {
    if basis_size < 1 {
        return Err(SolverError::InvalidArgument("basis size must be >= 1".into()));
    }
    if basis_size > MAX_BASIS_1D {
        return Err(SolverError::InvalidArgument(format!(
            "basis size {basis_size} exceeds the conditioning cap {MAX_BASIS_1D}"
        )));
    }
    let basis = GalerkinBasis1D::new(order, basis_size);
    let a = tensor_form(&basis, sides, order as usize)?;
    let b = tensor_form(&basis, sides, 1)?;
    Ok(AssembledForms { a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::gen_sym_eig;

    #[test]
    fn scalar_case_has_single_positive_eigenvalue() {
        let forms = assemble_rectangle(2, &[1.0, 1.0], 1).unwrap();
        let (vals, _) = gen_sym_eig(&forms.a, &forms.b).unwrap();
        assert_eq!(vals.len(), 1);
        assert!(vals[0] > 0.0);
    }

    #[test]
    fn eigenvalues_scale_with_dilation() {
        // doubling both sides divides eigenvalues by 2^{2(l-1)} = 4 at l=2
        let f1 = assemble_rectangle(2, &[1.0, 2.0], 4).unwrap();
        let f2 = assemble_rectangle(2, &[0.5, 1.0], 4).unwrap();
        let (v1, _) = gen_sym_eig(&f1.a, &f1.b).unwrap();
        let (v2, _) = gen_sym_eig(&f2.a, &f2.b).unwrap();
        for (x, y) in v1.iter().zip(v2.iter()) {
            assert!((4.0 * x - y).abs() <= 1e-8 * y.abs(), "{x} {y}");
        }
    }

    #[test]
    fn dimension_guard() {
        assert!(assemble_rectangle(2, &[1.0], 4).is_err());
        assert!(assemble_rectangle(2, &[1.0, 1.0, 1.0, 1.0], 2).is_err());
    }

    #[test]
    fn multinomial_coefficients_sum() {
        // sum of multinomial coefficients over |alpha| = p equals dim^p
        for dim in 1..=3usize {
            for p in 0..=3usize {
                let total: f64 = multinomial_indices(dim, p).iter().map(|(_, c)| c).sum();
                assert!((total - (dim as f64).powi(p as i32)).abs() < 1e-12);
            }
        }
    }
}
