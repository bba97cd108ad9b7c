//! Dense symmetric matrices, Cholesky factorization, and symmetric /
//! generalized symmetric eigensolvers (cyclic Jacobi).

use super::NumericsError;

/// Dense symmetric matrix, row-major storage, symmetrized at construction.
#[derive(Debug, Clone)]
pub struct DenseSymMatrix {
    size: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    /// Build from row-major entries. Entries with asymmetry beyond
    /// 1e-12 * max|A| are rejected; smaller asymmetry is averaged out.
    pub fn new(size: usize, data: Vec<f64>) -> Result<Self, NumericsError> {
        if data.len() != size * size {
            return Err(NumericsError::InvalidArgument(format!(
                "expected {} entries, got {}",
                size * size,
                data.len()
            )));
        }
        let maxabs = data.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let mut a = data;
        for i in 0..size {
            for j in (i + 1)..size {
                let d = (a[i * size + j] - a[j * size + i]).abs();
                if d > 1e-12 * maxabs.max(1.0e-300) {
                    return Err(NumericsError::NotSymmetric { row: i, col: j });
                }
                let avg = 0.5 * (a[i * size + j] + a[j * size + i]);
                a[i * size + j] = avg;
                a[j * size + i] = avg;
            }
        }
        Ok(Self { size, data: a })
    }

    /// Build from row-major entries of a matrix that is symmetric by
    /// construction, averaging away round-off asymmetry without the
    /// rejection check in `new`.
    pub(crate) fn symmetrized(size: usize, mut data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), size * size);
        for i in 0..size {
            for j in (i + 1)..size {
                let avg = 0.5 * (data[i * size + j] + data[j * size + i]);
                data[i * size + j] = avg;
                data[j * size + i] = avg;
            }
        }
        Self { size, data }
    }

    pub fn identity(size: usize) -> Self {
        let mut data = vec![0.0; size * size];
        for i in 0..size {
            data[i * size + i] = 1.0;
        }
        Self { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.size + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    /// y = A x
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            y[i] = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        }
        y
    }
}

/// Lower-triangular Cholesky factor L with A = L L^T.
///
/// Fails with `NotPositiveDefinite` when a pivot drops below
/// 1e-13 * max|A|.
pub fn cholesky(a: &DenseSymMatrix) -> Result<Vec<f64>, NumericsError> {
    let n = a.size();
    let scale = a.max_abs();
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 1e-13 * scale {
            return Err(NumericsError::NotPositiveDefinite { pivot: j });
        }
        let dj = d.sqrt();
        l[j * n + j] = dj;
        for i in (j + 1)..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / dj;
        }
    }
    Ok(l)
}

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// symmetric matrix, by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F; hard cap of 100 sweeps.
pub fn sym_eig(a: &DenseSymMatrix) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.size();
    if n == 0 {
        return (vec![], vec![]);
    }
    let mut m = a.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let fro: f64 = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-12 * fro;
    for _sweep in 0..100 {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    s += 2.0 * m[i * n + j] * m[i * n + j];
                }
            }
            s.sqrt()
        };
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // rows/cols p, q of M
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let vecs: Vec<Vec<f64>> = order
        .iter()
        .map(|&c| (0..n).map(|r| v[r * n + c]).collect())
        .collect();
    (vals, vecs)
}

/// Solve A v = lambda B v for symmetric A and positive-definite B.
///
/// Reduces via the Cholesky factor of B (C = L^{-1} A L^{-T}) and then
/// calls `sym_eig`. Returned eigenvectors are B-orthonormal.
pub fn gen_sym_eig(
    a: &DenseSymMatrix,
    b: &DenseSymMatrix,
) -> Result<(Vec<f64>, Vec<Vec<f64>>), NumericsError> {
    if a.size() != b.size() {
        return Err(NumericsError::InvalidArgument(
            "matrix sizes differ".into(),
        ));
    }
    let n = a.size();
    if n == 0 {
        return Ok((vec![], vec![]));
    }
    let l = cholesky(b)?;
    // W = L^{-1} A (forward substitution, column by column)
    let mut w = vec![0.0; n * n];
    for col in 0..n {
        for i in 0..n {
            let mut s = a.get(i, col);
            for k in 0..i {
                s -= l[i * n + k] * w[k * n + col];
            }
            w[i * n + col] = s / l[i * n + i];
        }
    }
    // C = W L^{-T}, i.e. C^T = L^{-1} W^T; C is symmetric, build row by row
    let mut c = vec![0.0; n * n];
    for row in 0..n {
        for i in 0..n {
            let mut s = w[row * n + i];
            for k in 0..i {
                s -= l[i * n + k] * c[row * n + k];
            }
            c[row * n + i] = s / l[i * n + i];
        }
    }
    // C is symmetric by construction; the triangular solves leave
    // round-off asymmetry proportional to cond(B), so average instead of
    // rejecting.
    let cm = DenseSymMatrix::symmetrized(n, c);
    let (vals, zs) = sym_eig(&cm);
    // v = L^{-T} z (back substitution)
    let vecs: Vec<Vec<f64>> = zs
        .iter()
        .map(|z| {
            let mut x = vec![0.0; n];
            for i in (0..n).rev() {
                let mut s = z[i];
                for k in (i + 1)..n {
                    s -= l[k * n + i] * x[k];
                }
                x[i] = s / l[i * n + i];
            }
            x
        })
        .collect();
    Ok((vals, vecs))
}
