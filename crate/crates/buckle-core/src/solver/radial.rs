//! Modal (azimuthal) assembly on the disc and the spherical cap.
//!
//! Disc mode m: f(r) = r^m h(t) with t = 2 r^2 - 1, stored through the
//! factor h(t) = ((1 - t)/2)^l P_j(t). Cap mode m in x = cos(theta):
//! f(x) = (1 - x^2)^{m/2} (x - x0)^l p(x), stored through its polynomial
//! factor in the local variable u = x - x0 on [0, 1 - x0]. Only squared or
//! paired integrals are evaluated, so half-integer powers never appear in
//! an integrand.
//!
//! Both representations exist for conditioning. Expanded in monomials of r
//! or of the global x, the mapped Legendre factors acquire coefficients
//! that grow geometrically with the degree and their evaluation cancels
//! catastrophically; in t and u every Horner term stays bounded. For the
//! same reason the quadratic forms below never expand products of factor
//! polynomials: each factor is evaluated at the quadrature nodes and the
//! integrand is combined pointwise.

use crate::numerics::{gauss_legendre, DenseSymMatrix, RealPolynomial};

use super::{AssembledForms, SolverError};

pub const MAX_BASIS_RADIAL: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialGeometry {
    Disc,
    /// Boundary colatitude stored as x0 = cos(theta0).
    Cap { x0: f64 },
}

/// One azimuthal mode of the radial basis.
#[derive(Debug, Clone)]
pub struct RadialBasis {
    pub geometry: RadialGeometry,
    pub order: u32,
    pub m: u32,
    /// Disc: the factor h(t), t = 2 r^2 - 1. Cap: the polynomial factor in
    /// u = x - x0.
    pub polys: Vec<RealPolynomial>,
}

/// p(a x + b) by Horner's scheme in polynomial arithmetic.
fn affine_substitute(p: &RealPolynomial, a: f64, b: f64) -> RealPolynomial {
    let lin = RealPolynomial::new(vec![b, a]);
    let mut out = RealPolynomial::zero();
    for &c in p.coeffs().iter().rev() {
        out = out.mul(&lin).add(&RealPolynomial::new(vec![c]));
    }
    out
}

impl RadialBasis {
    pub fn new(
        geometry: RadialGeometry,
        order: u32,
        m: u32,
        size: usize,
    ) -> Result<Self, SolverError> {
        if size < 1 {
            return Err(SolverError::InvalidArgument("basis size must be >= 1".into()));
        }
        if size > MAX_BASIS_RADIAL {
            return Err(SolverError::InvalidArgument(format!(
                "radial basis size {size} exceeds the conditioning cap {MAX_BASIS_RADIAL}"
            )));
        }
        let l = order as usize;
        let polys = match geometry {
            RadialGeometry::Disc => {
                // h_j(t) = ((1 - t)/2)^l P_j(t); 1 - r^2 = (1 - t)/2
                let mut weight = RealPolynomial::one();
                let factor = RealPolynomial::new(vec![0.5, -0.5]);
                for _ in 0..l {
                    weight = weight.mul(&factor);
                }
                (0..size)
                    .map(|j| weight.mul(&RealPolynomial::legendre(j)))
                    .collect()
            }
            RadialGeometry::Cap { x0 } => {
                // u^l P_j(2u/(1-x0) - 1), u = x - x0 on [0, 1 - x0]
                let mut weight = RealPolynomial::one();
                let factor = RealPolynomial::new(vec![0.0, 1.0]);
                for _ in 0..l {
                    weight = weight.mul(&factor);
                }
                let a = 2.0 / (1.0 - x0);
                (0..size)
                    .map(|j| affine_substitute(&RealPolynomial::legendre(j), a, -1.0).mul(&weight))
                    .collect()
            }
        };
        Ok(Self { geometry, order, m, polys })
    }

    pub fn size(&self) -> usize {
        self.polys.len()
    }

    /// Largest derivative of the polynomial factor through order l-1 at
    /// the boundary (t = 1 or u = 0); vanishes by construction.
    pub fn boundary_trace(&self) -> f64 {
        let l = self.order as usize;
        let at = match self.geometry {
            RadialGeometry::Disc => 1.0,
            RadialGeometry::Cap { .. } => 0.0,
        };
        let mut worst = 0.0_f64;
        for p in &self.polys {
            let mut d = p.clone();
            for _ in 0..l {
                worst = worst.max(d.eval(at).abs());
                d = d.diff();
            }
        }
        worst
    }
}

/// One application of the azimuthal-mode Laplacian, in exact polynomial
/// arithmetic.
///
/// Disc: action on the factor h of r^m h(t), t = 2 r^2 - 1, i.e.
/// 8 (1 + t) h'' + 8 (m + 1) h'. Cap: action on the polynomial factor p of
/// (1 - x^2)^{m/2} p(x), i.e. (1 - x^2) p'' - 2 (m + 1) x p' - m (m + 1) p,
/// expressed in u = x - x0.
pub fn radial_laplacian_apply(
    geometry: RadialGeometry,
    m: u32,
    poly: &RealPolynomial,
) -> Result<RealPolynomial, SolverError> {
    match geometry {
        RadialGeometry::Disc => {
            let one_plus_t = RealPolynomial::new(vec![1.0, 1.0]);
            Ok(one_plus_t
                .mul(&poly.diff_n(2))
                .scale(8.0)
                .add(&poly.diff().scale(8.0 * (m as f64 + 1.0))))
        }
        RadialGeometry::Cap { x0 } => {
            let mf = m as f64;
            let one_minus_x2 = RealPolynomial::new(vec![1.0 - x0 * x0, -2.0 * x0, -1.0]);
            let x = RealPolynomial::new(vec![x0, 1.0]);
            let term1 = one_minus_x2.mul(&poly.diff_n(2));
            let term2 = x.mul(&poly.diff()).scale(-2.0 * (mf + 1.0));
            let term3 = poly.scale(-mf * (mf + 1.0));
            Ok(term1.add(&term2).add(&term3))
        }
    }
}

/// Gauss-Legendre rule mapped to [a, b].
fn mapped_rule(npts: usize, a: f64, b: f64) -> Result<(Vec<f64>, Vec<f64>), SolverError> {
    let (nodes, weights) =
        gauss_legendre(npts).map_err(|e| SolverError::InvalidArgument(e.to_string()))?;
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    Ok((
        nodes.iter().map(|&x| mid + half * x).collect(),
        weights.iter().map(|&w| half * w).collect(),
    ))
}

/// Order-k quadratic form of one azimuthal mode (k = 1 is the Dirichlet
/// form). All integrands are polynomial and the node count is matched to
/// their degree, so the quadrature is exact; the factor polynomials are
/// evaluated at the nodes individually and multiplied pointwise, never
/// expanded into product polynomials.
pub fn mode_form(basis: &RadialBasis, k: usize) -> Result<DenseSymMatrix, SolverError> {
    let l = basis.order as usize;
    if k < 1 || k > l {
        return Err(SolverError::InvalidArgument(format!(
            "form order {k} outside 1..={l}"
        )));
    }
    let n = basis.size();
    let m = basis.m;
    let mf = m as f64;
    // iterated Laplacians of each basis function
    let p_needed = if k % 2 == 0 { k / 2 } else { (k - 1) / 2 };
    let mut iter: Vec<RealPolynomial> = basis.polys.clone();
    for _ in 0..p_needed {
        iter = iter
            .iter()
            .map(|p| radial_laplacian_apply(basis.geometry, m, p))
            .collect::<Result<_, _>>()?;
    }
    let odd = k % 2 == 1;
    let deg_h = iter
        .iter()
        .map(|p| p.coeffs().len().saturating_sub(1))
        .max()
        .unwrap_or(0);

    let eval_all = |ps: &[RealPolynomial], nodes: &[f64]| -> Vec<Vec<f64>> {
        ps.iter()
            .map(|p| nodes.iter().map(|&x| p.eval(x)).collect())
            .collect()
    };

    let mut data = vec![0.0; n * n];
    match basis.geometry {
        RadialGeometry::Disc => {
            // r dr = dt/4, s = r^2 = (1 + t)/2; weight powers s^{m +- 1}
            let deg = m as usize + 1 + 2 * deg_h;
            let (nodes, weights) = mapped_rule(deg / 2 + 2, -1.0, 1.0)?;
            let hv = eval_all(&iter, &nodes);
            let hd = if odd {
                let d: Vec<RealPolynomial> = iter.iter().map(|p| p.diff()).collect();
                eval_all(&d, &nodes)
            } else {
                Vec::new()
            };
            let s: Vec<f64> = nodes.iter().map(|&t| 0.5 * (1.0 + t)).collect();
            let sm: Vec<f64> = s.iter().map(|&v| v.powi(m as i32)).collect();
            for i in 0..n {
                for j in i..n {
                    let mut v = 0.0;
                    for (q, w) in weights.iter().enumerate() {
                        let density = if odd {
                            // |grad (r^m h)|^2 including the angular part
                            let mut d = 16.0 * s[q] * sm[q] * hd[i][q] * hd[j][q];
                            d += 4.0 * mf * sm[q] * (hv[i][q] * hd[j][q] + hd[i][q] * hv[j][q]);
                            if m > 0 {
                                d += 2.0 * mf * mf * (sm[q] / s[q]) * hv[i][q] * hv[j][q];
                            }
                            d
                        } else {
                            sm[q] * hv[i][q] * hv[j][q]
                        };
                        v += 0.25 * w * density;
                    }
                    data[i * n + j] = v;
                    data[j * n + i] = v;
                }
            }
        }
        RadialGeometry::Cap { x0 } => {
            let len = 1.0 - x0;
            let deg = 2 * (m as usize + 1) + 2 * deg_h;
            let (nodes, weights) = mapped_rule(deg / 2 + 2, 0.0, len)?;
            let qv = eval_all(&iter, &nodes);
            let qd = if odd {
                let d: Vec<RealPolynomial> = iter.iter().map(|p| p.diff()).collect();
                eval_all(&d, &nodes)
            } else {
                Vec::new()
            };
            // W = 1 - x^2 at x = u + x0; interior nodes keep W > 0
            let x: Vec<f64> = nodes.iter().map(|&u| u + x0).collect();
            let wv: Vec<f64> = x.iter().map(|&xq| 1.0 - xq * xq).collect();
            let wm: Vec<f64> = wv.iter().map(|&v| v.powi(m as i32)).collect();
            for i in 0..n {
                for j in i..n {
                    let mut v = 0.0;
                    for (q, w) in weights.iter().enumerate() {
                        let density = if odd {
                            // mode gradient energy of g = W^{m/2} q:
                            //   W^{m+1} q_i' q_j'
                            //   - m x W^m (q_i q_j)'
                            //   + m^2 (1 + x^2) W^{m-1} q_i q_j
                            let mut d = wv[q] * wm[q] * qd[i][q] * qd[j][q];
                            if m > 0 {
                                d -= mf
                                    * x[q]
                                    * wm[q]
                                    * (qv[i][q] * qd[j][q] + qd[i][q] * qv[j][q]);
                                d += mf * mf * (1.0 + x[q] * x[q]) * (wm[q] / wv[q])
                                    * qv[i][q] * qv[j][q];
                            }
                            d
                        } else {
                            wm[q] * qv[i][q] * qv[j][q]
                        };
                        v += w * density;
                    }
                    data[i * n + j] = v;
                    data[j * n + i] = v;
                }
            }
        }
    }
    DenseSymMatrix::new(n, data).map_err(|e| SolverError::Assembly(e.to_string()))
}

/// Leading and Dirichlet forms for one azimuthal mode. `radius` scales the
/// disc forms by the exact change-of-variables powers; the cap lives on the
/// unit sphere and takes no size parameter.
pub fn assemble_modal(
    geometry: RadialGeometry,
    order: u32,
    m: u32,
    size: usize,
    radius: f64,
) -> Result<AssembledForms, SolverError> {
    let basis = RadialBasis::new(geometry, order, m, size)?;
    let mut a = mode_form(&basis, order as usize)?;
    let mut b = mode_form(&basis, 1)?;
    if let RadialGeometry::Disc = geometry {
        a = scale_matrix(&a, radius.powi(2 - 2 * order as i32));
        b = scale_matrix(&b, 1.0); // radius^{2-2} = 1 in two dimensions
    }
    Ok(AssembledForms { a, b })
}

pub(crate) fn scale_matrix(m: &DenseSymMatrix, s: f64) -> DenseSymMatrix {
    DenseSymMatrix::new(m.size(), m.data().iter().map(|v| v * s).collect())
        .expect("scaling preserves symmetry")
}
