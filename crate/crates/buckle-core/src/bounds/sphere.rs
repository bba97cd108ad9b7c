//! Universal eigenvalue bounds for spherical buckling spectra: the exact
//! F_q/G_q recursion, extraction of the a_j coefficients, H_i, the
//! delta-parameterized gap inequality, its optimal delta, the closed-form
//! bound, and the l = 2 sharpness comparator.

use crate::numerics::{IntPolynomial, NumericsError};
use crate::spectrum::{Geometry, Spectrum};

use super::BoundsError;

/// The polynomial pair F_0..F_{l-2}, G_0..G_{l-2} plus the coefficients of
/// t F_{l-2}(t) - G_{l-2}(t) = t^{l-1} + a_{l-2} t^{l-2} + ... + a_0.
///
/// Both defining recursions are computed independently and must agree
/// coefficient-for-coefficient; construction fails otherwise.
#[derive(Debug, Clone)]
pub struct SphereRecursion {
    pub dimension: u32,
    pub order: u32,
    pub f: Vec<IntPolynomial>,
    pub g: Vec<IntPolynomial>,
    /// a_0 .. a_{l-2}
    pub a: Vec<i128>,
}

fn overflow(e: NumericsError) -> BoundsError {
    match e {
        NumericsError::IntegerOverflow => BoundsError::IntegerOverflow,
        other => BoundsError::Internal(other.to_string()),
    }
}

/// Build the recursion for given order l >= 2 and dimension n >= 2.
pub fn fg_polys(order: u32, dimension: u32) -> Result<SphereRecursion, BoundsError> {
    if order < 2 {
        return Err(BoundsError::OrderMismatch { expected: 2, found: order });
    }
    if dimension < 2 {
        return Err(BoundsError::DimensionOutOfRange(dimension));
    }
    let n = dimension as i128;
    let qmax = (order - 2) as usize;
    let t = IntPolynomial::new(vec![0, 1]);

    // three-term route: seeds F_0 = G_0 = 1, F_1 = t - (n+2), G_1 = 3t + n - 2,
    // then X_q = (2t - 2) X_{q-1} - (t^2 + 2t - n(n-2)) X_{q-2}
    let two_t_minus_2 = IntPolynomial::new(vec![-2, 2]);
    let quad = IntPolynomial::new(vec![-n * (n - 2), 2, 1]);
    let mut f = vec![IntPolynomial::constant(1)];
    let mut g = vec![IntPolynomial::constant(1)];
    if qmax >= 1 {
        f.push(IntPolynomial::new(vec![-(n + 2), 1]));
        g.push(IntPolynomial::new(vec![n - 2, 3]));
    }
    for q in 2..=qmax {
        let next_f = two_t_minus_2
            .mul(&f[q - 1])
            .map_err(overflow)?
            .sub(&quad.mul(&f[q - 2]).map_err(overflow)?)
            .map_err(overflow)?;
        let next_g = two_t_minus_2
            .mul(&g[q - 1])
            .map_err(overflow)?
            .sub(&quad.mul(&g[q - 2]).map_err(overflow)?)
            .map_err(overflow)?;
        f.push(next_f);
        g.push(next_g);
    }

    // coupled route: F_q = (t - n) F_{q-1} - 2 G_{q-1},
    //                G_q = (t + n - 2) G_{q-1} + 2t F_{q-1}
    let t_minus_n = IntPolynomial::new(vec![-n, 1]);
    let t_plus_n2 = IntPolynomial::new(vec![n - 2, 1]);
    let mut cf = vec![IntPolynomial::constant(1)];
    let mut cg = vec![IntPolynomial::constant(1)];
    for q in 1..=qmax {
        let next_f = t_minus_n
            .mul(&cf[q - 1])
            .map_err(overflow)?
            .sub(&cg[q - 1].mul(&IntPolynomial::constant(2)).map_err(overflow)?)
            .map_err(overflow)?;
        let next_g = t_plus_n2
            .mul(&cg[q - 1])
            .map_err(overflow)?
            .add(&t.mul(&cf[q - 1]).map_err(overflow)?.mul(&IntPolynomial::constant(2)).map_err(overflow)?)
            .map_err(overflow)?;
        cf.push(next_f);
        cg.push(next_g);
    }
    for q in 0..=qmax {
        if f[q] != cf[q] || g[q] != cg[q] {
            return Err(BoundsError::RecursionMismatch { q });
        }
    }

    // t F_{l-2} - G_{l-2}, monic of degree l-1
    let comb = t
        .mul(&f[qmax])
        .map_err(overflow)?
        .sub(&g[qmax])
        .map_err(overflow)?;
    if comb.degree() != Some((order - 1) as usize) || comb.coeff((order - 1) as usize) != 1 {
        return Err(BoundsError::NotMonic);
    }
    let a: Vec<i128> = (0..(order - 1) as usize).map(|j| comb.coeff(j)).collect();
    Ok(SphereRecursion {
        dimension,
        order,
        f,
        g,
        a,
    })
}

/// Coefficients a_0 .. a_{l-2} of t F_{l-2}(t) - G_{l-2}(t) below the
/// monic leading term.
pub fn aj_coefficients(order: u32, dimension: u32) -> Result<Vec<i128>, BoundsError> {
    Ok(fg_polys(order, dimension)?.a)
}

fn rho(lambda: f64, order: u32) -> f64 {
    lambda.powf(1.0 / (order as f64 - 1.0))
}

fn check_rho(lambda: f64, order: u32, dimension: u32) -> Result<f64, BoundsError> {
    let r = rho(lambda, order);
    if r <= (dimension as f64) - 2.0 {
        return Err(BoundsError::PreconditionViolated { rho: r, dimension });
    }
    Ok(r)
}

/// H(Lambda) = rho (1 - 1/(rho - (n-2))) + sum_j |a_j| rho^j, rho = Lambda^{1/(l-1)}.
pub fn h_value(lambda: f64, order: u32, dimension: u32) -> Result<f64, BoundsError> {
    let r = check_rho(lambda, order, dimension)?;
    let n2 = dimension as f64 - 2.0;
    let a = aj_coefficients(order, dimension)?;
    let tail: f64 = a
        .iter()
        .enumerate()
        .map(|(j, &aj)| (aj.unsigned_abs() as f64) * r.powi(j as i32))
        .sum();
    Ok(r * (1.0 - 1.0 / (r - n2)) + tail)
}

fn sphere_inputs(spectrum: &Spectrum, upto: usize) -> Result<(Vec<f64>, Vec<f64>), BoundsError> {
    if spectrum.geometry() != Geometry::Sphere {
        return Err(BoundsError::WrongGeometry);
    }
    let vals = &spectrum.values()[..upto];
    let rhos: Vec<f64> = vals
        .iter()
        .map(|&v| check_rho(v, spectrum.order(), spectrum.dimension()))
        .collect::<Result<_, _>>()?;
    let hs: Vec<f64> = vals
        .iter()
        .map(|&v| h_value(v, spectrum.order(), spectrum.dimension()))
        .collect::<Result<_, _>>()?;
    Ok((rhos, hs))
}

/// RHS - LHS of the delta-parameterized gap inequality; nonnegative means
/// satisfied.
///
/// LHS = sum (L_{k+1}-L_i)^2 (2 + (n-2)/(rho_i - (n-2)));
/// RHS = delta sum (L_{k+1}-L_i)^2 H_i
///     + (1/delta) sum (L_{k+1}-L_i)(rho_i + (n-2)^2/4).
pub fn thm12_residual(spectrum: &Spectrum, k: usize, delta: f64) -> Result<f64, BoundsError> {
    if !(delta > 0.0) {
        return Err(BoundsError::NonPositiveDelta(delta));
    }
    if k < 1 || k + 1 > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let (rhos, hs) = sphere_inputs(spectrum, k)?;
    let vals = spectrum.values();
    let lam_next = vals[k];
    let n2 = spectrum.dimension() as f64 - 2.0;
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for i in 0..k {
        let gap = lam_next - vals[i];
        // weight written with (n-2) in the numerator; no division by n-2
        let w = 2.0 + n2 / (rhos[i] - n2);
        lhs += gap * gap * w;
        rhs += delta * gap * gap * hs[i] + (gap / delta) * (rhos[i] + n2 * n2 / 4.0);
    }
    Ok(rhs - lhs)
}

/// The delta minimizing the RHS of the gap inequality:
/// sqrt(sum gap (rho + (n-2)^2/4)) / sqrt(sum gap^2 H).
pub fn optimal_delta(spectrum: &Spectrum, k: usize) -> Result<f64, BoundsError> {
    if k < 1 || k + 1 > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let (rhos, hs) = sphere_inputs(spectrum, k)?;
    let vals = spectrum.values();
    let lam_next = vals[k];
    let n2 = spectrum.dimension() as f64 - 2.0;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..k {
        let gap = lam_next - vals[i];
        num += gap * (rhos[i] + n2 * n2 / 4.0);
        den += gap * gap * hs[i];
    }
    if den <= 0.0 || num <= 0.0 {
        return Err(BoundsError::DegenerateGaps);
    }
    Ok((num / den).sqrt())
}

/// Logarithmic delta grid for envelope reporting: 25 points per decade over
/// [1e-2, 1e2].
pub fn delta_grid() -> Vec<f64> {
    (0..=100)
        .map(|i| 10f64.powf(-2.0 + (i as f64) / 25.0))
        .collect()
}

/// Closed-form bound ingredients and value: Lambda_{k+1} <= A + sqrt(A^2 - B).
#[derive(Debug, Clone)]
pub struct SphereBound {
    pub s_k: f64,
    pub t: Vec<f64>,
    pub a: f64,
    pub b: f64,
    /// None when A^2 < B (input not realizable as a buckling spectrum).
    pub bound: Option<f64>,
}

pub fn cor12_bound(spectrum: &Spectrum, k: usize) -> Result<SphereBound, BoundsError> {
    if k < 1 || k > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let (rhos, hs) = sphere_inputs(spectrum, k)?;
    let vals = &spectrum.values()[..k];
    let n2 = spectrum.dimension() as f64 - 2.0;
    let kf = k as f64;
    let s_k = 2.0 + n2 / (rhos[k - 1] - n2);
    let t: Vec<f64> = (0..k)
        .map(|i| hs[i] * (rhos[i] + n2 * n2 / 4.0))
        .collect();
    let mean: f64 = vals.iter().sum::<f64>() / kf;
    let mean_sq: f64 = vals.iter().map(|v| v * v).sum::<f64>() / kf;
    let sum_t: f64 = t.iter().sum();
    let sum_t_lam: f64 = t.iter().zip(vals).map(|(ti, v)| ti * v).sum();
    let a = mean + 2.0 / (kf * s_k * s_k) * sum_t;
    let b = mean_sq + 4.0 / (kf * s_k * s_k) * sum_t_lam;
    let bound = (a * a >= b).then(|| a + (a * a - b).sqrt());
    Ok(SphereBound { s_k, t, a, b, bound })
}

/// Aggregate RHS values of the l = 2 remark inequality and of the earlier
/// sphere bound it sharpens, at the same delta.
pub fn wx_comparator(
    spectrum: &Spectrum,
    k: usize,
    delta: f64,
) -> Result<(f64, f64), BoundsError> {
    if spectrum.order() != 2 {
        return Err(BoundsError::OrderMismatch {
            expected: 2,
            found: spectrum.order(),
        });
    }
    if !(delta > 0.0) {
        return Err(BoundsError::NonPositiveDelta(delta));
    }
    if k < 1 || k + 1 > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let vals = spectrum.values();
    let lam_next = vals[k];
    let n2 = spectrum.dimension() as f64 - 2.0;
    let mut rhs_sharp = 0.0;
    let mut rhs_old = 0.0;
    let mut common = 0.0;
    for i in 0..k {
        let lam = vals[i];
        if lam <= n2 {
            return Err(BoundsError::PreconditionViolated { rho: lam, dimension: spectrum.dimension() });
        }
        let gap = lam_next - lam;
        rhs_sharp += gap * gap * per_i_factor_sharp(delta, lam, n2);
        rhs_old += gap * gap * per_i_factor_old(delta, lam, n2);
        common += (gap / delta) * (lam + n2 * n2 / 4.0);
    }
    Ok((rhs_sharp + common, rhs_old + common))
}

/// delta + delta L (1 - 1/(L-(n-2))) - (n-2)/(L-(n-2))
pub fn per_i_factor_sharp(delta: f64, lam: f64, n_minus_2: f64) -> f64 {
    delta + delta * lam * (1.0 - 1.0 / (lam - n_minus_2)) - n_minus_2 / (lam - n_minus_2)
}

/// delta L + delta^2 (L-(n-2)) / (4 (delta L + n-2))
pub fn per_i_factor_old(delta: f64, lam: f64, n_minus_2: f64) -> f64 {
    delta * lam + delta * delta * (lam - n_minus_2) / (4.0 * (delta * lam + n_minus_2))
}
