//! Inequality and moment-chain checks behind `buckle verify`.

use buckle_core::bounds::{
    cor11_bounds, cor12_bound, delta_grid, optimal_delta, thm11_residual, thm12_residual,
    BoundsError,
};
use buckle_core::io::SolutionFile;
use buckle_core::{Geometry, Spectrum};

/// Run every applicable check; returns human-readable violation messages
/// (empty means pass).
pub fn run_checks(
    spectrum: &Spectrum,
    solution: Option<&SolutionFile>,
    tolerance: f64,
    k_max: Option<usize>,
) -> Result<Vec<String>, BoundsError> {
    let mut violations = Vec::new();
    let len = spectrum.len();
    let k_top = k_max.unwrap_or(len.saturating_sub(1)).min(len.saturating_sub(1));
    for k in 1..=k_top {
        let lam_next = spectrum.values()[k];
        // gap-squared scale absorbs discretization error in solver spectra
        let scale: f64 = spectrum.values()[..k]
            .iter()
            .map(|&v| (lam_next - v) * (lam_next - v))
            .sum();
        match spectrum.geometry() {
            Geometry::Euclidean => {
                let residual = thm11_residual(spectrum, k)?;
                if residual > tolerance * scale {
                    violations.push(format!(
                        "k={k}: quadratic gap inequality violated, residual {residual:.6e} > {:.6e}",
                        tolerance * scale
                    ));
                }
                let (bound_a, bound_b) = cor11_bounds(spectrum, k)?;
                check_bound(&mut violations, "a", k, bound_a, lam_next, tolerance);
                check_bound(&mut violations, "b", k, bound_b, lam_next, tolerance);
            }
            Geometry::Sphere => {
                let delta_star = match optimal_delta(spectrum, k) {
                    Ok(d) => Some(d),
                    Err(BoundsError::DegenerateGaps) => None,
                    Err(e) => return Err(e),
                };
                for delta in delta_grid().into_iter().chain(delta_star) {
                    let residual = thm12_residual(spectrum, k, delta)?;
                    if residual < -tolerance * scale {
                        violations.push(format!(
                            "k={k}: gap inequality violated at delta={delta:.6e}, residual {residual:.6e}"
                        ));
                        break;
                    }
                }
                let bound = cor12_bound(spectrum, k)?.bound;
                check_bound(&mut violations, "sphere", k, bound, lam_next, tolerance);
            }
        }
    }
    if let Some(sol) = solution {
        check_moments(&mut violations, spectrum, sol, tolerance);
    }
    Ok(violations)
}

fn check_bound(
    violations: &mut Vec<String>,
    tag: &str,
    k: usize,
    bound: Option<f64>,
    lam_next: f64,
    tolerance: f64,
) {
    match bound {
        Some(b) if b < lam_next * (1.0 - tolerance) => violations.push(format!(
            "k={k}: closed-form bound {tag} = {b:.12e} below the next eigenvalue {lam_next:.12e}"
        )),
        None => violations.push(format!("k={k}: closed-form bound {tag} undefined")),
        _ => {}
    }
}

/// Moment-chain checks: the Dirichlet normalization mu_1 = 1, the top moment
/// mu_l = Lambda, and the interpolation bounds 0 <= mu_k <= Lambda^{(k-1)/(l-1)}.
fn check_moments(
    violations: &mut Vec<String>,
    spectrum: &Spectrum,
    solution: &SolutionFile,
    tolerance: f64,
) {
    if solution.order != spectrum.order() {
        violations.push(format!(
            "solution dump order {} does not match spectrum order {}",
            solution.order,
            spectrum.order()
        ));
        return;
    }
    let l = solution.order as usize;
    for (i, mu) in solution.moments.iter().enumerate() {
        let lam = match solution.eigenvalues.get(i) {
            Some(&v) => v,
            None => {
                violations.push(format!("eigenpair {i}: moments without an eigenvalue"));
                continue;
            }
        };
        if mu.len() != l {
            violations.push(format!("eigenpair {i}: expected {l} moments, found {}", mu.len()));
            continue;
        }
        if (mu[0] - 1.0).abs() > tolerance {
            violations.push(format!("eigenpair {i}: mu_1 = {} differs from 1", mu[0]));
        }
        if (mu[l - 1] - lam).abs() > tolerance * lam.abs().max(1.0) {
            violations.push(format!(
                "eigenpair {i}: mu_{l} = {} differs from the eigenvalue {lam}",
                mu[l - 1]
            ));
        }
        for (k, &m) in mu.iter().enumerate() {
            let cap = lam.powf(k as f64 / (l as f64 - 1.0));
            if m < -tolerance * cap || m > cap * (1.0 + tolerance) {
                violations.push(format!(
                    "eigenpair {i}: mu_{} = {m} outside [0, {cap}]",
                    k + 1
                ));
            }
        }
    }
}
