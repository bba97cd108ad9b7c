//! Universal eigenvalue bounds for Euclidean buckling spectra: the gap
//! inequality with coefficient C = 2l^2 + (n-4)l + 2 - n, its two closed-form
//! relaxations, the l = 2 comparator, and the sequence-inequality utilities
//! used in the relaxation step.

use crate::spectrum::{Geometry, Spectrum};

use super::BoundsError;

/// C(l, n) = 2l^2 + (n-4)l + 2 - n; positive for l >= 2, n >= 1.
pub fn coefficient_c(order: u32, dimension: u32) -> i64 {
    let l = order as i64;
    let n = dimension as i64;
    2 * l * l + (n - 4) * l + 2 - n
}

fn check_euclidean(spectrum: &Spectrum) -> Result<(), BoundsError> {
    if spectrum.geometry() != Geometry::Euclidean {
        return Err(BoundsError::WrongGeometry);
    }
    Ok(())
}

/// LHS - RHS of the gap inequality
///   sum (L_{k+1}-L_i)^2 <= (2 sqrt(C)/n) * sqrt(sum (L_{k+1}-L_i)^2 L_i^{(l-2)/(l-1)})
///                                        * sqrt(sum (L_{k+1}-L_i)   L_i^{1/(l-1)}),
/// with L_{k+1} taken from the spectrum. Nonpositive means satisfied.
pub fn thm11_residual(spectrum: &Spectrum, k: usize) -> Result<f64, BoundsError> {
    check_euclidean(spectrum)?;
    if k < 1 || k + 1 > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let vals = spectrum.values();
    let lam_next = vals[k];
    let l = spectrum.order() as f64;
    let n = spectrum.dimension() as f64;
    let c = coefficient_c(spectrum.order(), spectrum.dimension()) as f64;
    let mut lhs = 0.0;
    let mut s_sq = 0.0; // sum gap^2 * L^{(l-2)/(l-1)}
    let mut s_lin = 0.0; // sum gap * L^{1/(l-1)}
    for &lam in &vals[..k] {
        let gap = lam_next - lam;
        lhs += gap * gap;
        s_sq += gap * gap * lam.powf((l - 2.0) / (l - 1.0));
        s_lin += gap * lam.powf(1.0 / (l - 1.0));
    }
    let rhs = (2.0 * c.sqrt() / n) * s_sq.sqrt() * s_lin.sqrt();
    Ok(lhs - rhs)
}

/// The two closed-form upper bounds on Lambda_{k+1} from the first k
/// eigenvalues. A negative discriminant certifies the input cannot be a
/// buckling spectrum and yields `None` for that bound.
pub fn cor11_bounds(
    spectrum: &Spectrum,
    k: usize,
) -> Result<(Option<f64>, Option<f64>), BoundsError> {
    check_euclidean(spectrum)?;
    if k < 1 || k > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let vals = &spectrum.values()[..k];
    let l = spectrum.order() as f64;
    let n = spectrum.dimension() as f64;
    let kf = k as f64;
    let c = coefficient_c(spectrum.order(), spectrum.dimension()) as f64;
    let mean: f64 = vals.iter().sum::<f64>() / kf;
    let variance: f64 = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / kf;
    let sum_frac_a: f64 = vals.iter().map(|v| v.powf((l - 2.0) / (l - 1.0))).sum();
    let sum_frac_b: f64 = vals.iter().map(|v| v.powf(1.0 / (l - 1.0))).sum();
    let d = sum_frac_a * sum_frac_b;

    // bound (a): mean + (2C/(k^2 n^2)) D + sqrt((2C D/(k^2 n^2))^2 - variance)
    let t = 2.0 * c * d / (kf * kf * n * n);
    let disc_a = t * t - variance;
    let bound_a = (disc_a >= 0.0).then(|| mean + t + disc_a.sqrt());

    // bound (b): (1 + 2C/n^2) mean + sqrt((2C mean/n^2)^2 - (1 + 4C/n^2) variance)
    let g = 2.0 * c / (n * n);
    let disc_b = (g * mean) * (g * mean) - (1.0 + 2.0 * g) * variance;
    let bound_b = (disc_b >= 0.0).then(|| (1.0 + g) * mean + disc_b.sqrt());

    Ok((bound_a, bound_b))
}

/// LHS - RHS of the l = 2 comparator
/// sum (L_{k+1}-L_i)^2 - (4(n+2)/n^2) sum (L_{k+1}-L_i) L_i.
pub fn chengyang_residual(spectrum: &Spectrum, k: usize) -> Result<f64, BoundsError> {
    check_euclidean(spectrum)?;
    if spectrum.order() != 2 {
        return Err(BoundsError::OrderMismatch {
            expected: 2,
            found: spectrum.order(),
        });
    }
    if k < 1 || k + 1 > spectrum.len() {
        return Err(BoundsError::KOutOfRange { k, len: spectrum.len() });
    }
    let vals = spectrum.values();
    let lam_next = vals[k];
    let n = spectrum.dimension() as f64;
    let mut lhs = 0.0;
    let mut s = 0.0;
    for &lam in &vals[..k] {
        let gap = lam_next - lam;
        lhs += gap * gap;
        s += gap * lam;
    }
    Ok(lhs - 4.0 * (n + 2.0) / (n * n) * s)
}

fn check_monotone(seq: &[f64], increasing: bool) -> bool {
    seq.windows(2)
        .all(|w| if increasing { w[1] >= w[0] } else { w[1] <= w[0] })
}

/// RHS - LHS of the three-sequence rearrangement inequality
/// (sum a^2 b)(sum a c) <= (sum a^2)(sum a b c), for nonnegative a
/// decreasing, b and c increasing. Nonnegative when the hypotheses hold.
pub fn lemma22_residual(a: &[f64], b: &[f64], c: &[f64]) -> Result<f64, BoundsError> {
    if a.len() != b.len() || a.len() != c.len() {
        return Err(BoundsError::LengthMismatch);
    }
    if a.iter().chain(b).chain(c).any(|v| *v < 0.0) {
        return Err(BoundsError::MonotonicityViolation);
    }
    if !check_monotone(a, false) || !check_monotone(b, true) || !check_monotone(c, true) {
        return Err(BoundsError::MonotonicityViolation);
    }
    let sum_a2: f64 = a.iter().map(|x| x * x).sum();
    let sum_abc: f64 = a.iter().zip(b).zip(c).map(|((x, y), z)| x * y * z).sum();
    let sum_a2b: f64 = a.iter().zip(b).map(|(x, y)| x * x * y).sum();
    let sum_ac: f64 = a.iter().zip(c).map(|(x, z)| x * z).sum();
    Ok(sum_a2 * sum_abc - sum_a2b * sum_ac)
}

/// (1/m)(sum a)(sum b) - sum a b for a increasing and b decreasing;
/// nonnegative when the hypotheses hold (reverse Chebyshev).
pub fn reverse_chebyshev_residual(a: &[f64], b: &[f64]) -> Result<f64, BoundsError> {
    if a.len() != b.len() {
        return Err(BoundsError::LengthMismatch);
    }
    if a.is_empty() {
        return Err(BoundsError::LengthMismatch);
    }
    if !check_monotone(a, true) || !check_monotone(b, false) {
        return Err(BoundsError::MonotonicityViolation);
    }
    let m = a.len() as f64;
    let sum_a: f64 = a.iter().sum();
    let sum_b: f64 = b.iter().sum();
    let sum_ab: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    Ok(sum_a * sum_b / m - sum_ab)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, l: u32, vals: &[f64]) -> Spectrum {
        Spectrum::validate(Geometry::Euclidean, n, l, vals.to_vec()).unwrap()
    }

    #[test]
    fn coefficient_matches_comparator_at_l2() {
        for n in 2..=8 {
            assert_eq!(coefficient_c(2, n), n as i64 + 2);
        }
        assert_eq!(coefficient_c(3, 2), 12);
        assert_eq!(coefficient_c(4, 3), 27);
    }

    #[test]
    fn residual_hand_values() {
        let r = thm11_residual(&spec(2, 2, &[1.0, 2.0]), 1).unwrap();
        assert!((r - (-1.0)).abs() < 1e-12);
        let r = thm11_residual(&spec(2, 2, &[1.0, 1.0]), 1).unwrap();
        assert_eq!(r, 0.0);
        let r = thm11_residual(&spec(2, 3, &[1.0, 2.0]), 1).unwrap();
        assert!((r - (1.0 - 2.0 * 3.0_f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn residual_range_checks() {
        assert!(thm11_residual(&spec(2, 2, &[1.0, 2.0]), 2).is_err());
        assert!(thm11_residual(&spec(2, 2, &[1.0, 2.0]), 0).is_err());
    }

    #[test]
    fn bounds_hand_values() {
        let (a, b) = cor11_bounds(&spec(2, 2, &[1.0]), 1).unwrap();
        assert!((a.unwrap() - 5.0).abs() < 1e-12);
        assert!((b.unwrap() - 5.0).abs() < 1e-12);
        // degree-1 homogeneity
        let (a2, b2) = cor11_bounds(&spec(2, 2, &[2.0]), 1).unwrap();
        assert!((a2.unwrap() - 10.0).abs() < 1e-12);
        assert!((b2.unwrap() - 10.0).abs() < 1e-12);
        // two equal eigenvalues, k = 2: D = 4, variance 0
        let (a3, b3) = cor11_bounds(&spec(2, 2, &[1.0, 1.0]), 2).unwrap();
        assert!((a3.unwrap() - 5.0).abs() < 1e-12);
        assert!((b3.unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn chengyang_hand_values() {
        let r = chengyang_residual(&spec(2, 2, &[1.0, 2.0]), 1).unwrap();
        assert!((r - (-3.0)).abs() < 1e-12);
        let r = chengyang_residual(&spec(2, 2, &[1.0, 1.0]), 1).unwrap();
        assert_eq!(r, 0.0);
        assert!(chengyang_residual(&spec(2, 3, &[1.0, 2.0]), 1).is_err());
    }

    #[test]
    fn lemma22_hand_value() {
        let r = lemma22_residual(&[2.0, 1.0], &[1.0, 2.0], &[1.0, 2.0]).unwrap();
        assert!((r - 6.0).abs() < 1e-12);
        assert_eq!(lemma22_residual(&[3.0], &[1.0], &[2.0]).unwrap(), 0.0);
        let r = lemma22_residual(&[1.0, 1.0], &[2.0, 2.0], &[3.0, 3.0]).unwrap();
        assert!(r.abs() < 1e-12);
        assert!(lemma22_residual(&[1.0, 2.0], &[1.0, 2.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn reverse_chebyshev_hand_values() {
        let r = reverse_chebyshev_residual(&[1.0, 2.0], &[2.0, 1.0]).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        let r = reverse_chebyshev_residual(&[1.0, 3.0], &[5.0, 1.0]).unwrap();
        assert!((r - 4.0).abs() < 1e-12);
        let r = reverse_chebyshev_residual(&[2.0, 2.0], &[3.0, 3.0]).unwrap();
        assert!(r.abs() < 1e-12);
        assert!(reverse_chebyshev_residual(&[2.0, 1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn residual_homogeneity_degree_two() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(2..=5);
            let l = rng.gen_range(2..=5);
            let len = rng.gen_range(2..=6);
            let mut vals: Vec<f64> = (0..len).map(|_| rng.gen_range(0.5..50.0)).collect();
            vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let s = spec(n, l, &vals);
            let k = len - 1;
            let r1 = thm11_residual(&s, k).unwrap();
            for t in [0.5, 2.0, 10.0] {
                let scaled: Vec<f64> = vals.iter().map(|v| v * t).collect();
                let st = spec(n, l, &scaled);
                let rt = thm11_residual(&st, k).unwrap();
                assert!(
                    (rt - t * t * r1).abs() <= 1e-9 * rt.abs().max(t * t * r1.abs()).max(1e-300),
                    "t={t}: {rt} vs {}",
                    t * t * r1
                );
            }
        }
    }

    #[test]
    fn bound_dominance_when_residual_nonpositive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut seen = 0;
        for _ in 0..200 {
            let n = rng.gen_range(2..=4);
            let l = rng.gen_range(2..=4);
            let len = rng.gen_range(2..=6);
            let mut vals: Vec<f64> = (0..len).map(|_| rng.gen_range(1.0..10.0)).collect();
            vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let s = spec(n, l, &vals);
            let k = len - 1;
            if thm11_residual(&s, k).unwrap() <= 0.0 {
                seen += 1;
                let lam_next = vals[k];
                let (a, b) = cor11_bounds(&s, k).unwrap();
                if let Some(a) = a {
                    assert!(lam_next <= a * (1.0 + 1e-10), "{lam_next} > {a}");
                }
                if let Some(b) = b {
                    assert!(lam_next <= b * (1.0 + 1e-10), "{lam_next} > {b}");
                }
            }
        }
        assert!(seen > 10, "too few feasible samples ({seen}) to be meaningful");
    }
}
