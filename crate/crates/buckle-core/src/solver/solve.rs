//! Buckling eigensolve over a domain: assembly, generalized eigensolve,
//! modal merging, and the moment chain mu_k = int u (-Delta)^k u.

use crate::numerics::{gen_sym_eig, DenseSymMatrix, NumericsError};
use crate::spectrum::{DomainSpec, EigenSolution};

use super::radial::{mode_form, scale_matrix, RadialBasis, RadialGeometry};
use super::rectangle::tensor_form;
use super::{basis::GalerkinBasis1D, rectangle, SolverError};

pub const DEFAULT_M_MAX: u32 = 8;

fn eig(
    a: &DenseSymMatrix,
    b: &DenseSymMatrix,
) -> Result<(Vec<f64>, Vec<Vec<f64>>), SolverError> {
    // Equalize the (unnormalized) basis scales through the Dirichlet
    // diagonal before the Cholesky reduction; a congruence by a diagonal
    // matrix leaves the eigenvalues untouched.
    let n = b.size();
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let bii = b.get(i, i);
        if !(bii > 0.0) {
            return Err(SolverError::IllConditioned);
        }
        d.push(bii.sqrt());
    }
    let d = &d;
    let rescale = |m: &DenseSymMatrix| {
        let data = (0..n)
            .flat_map(|i| (0..n).map(move |j| m.get(i, j) / (d[i] * d[j])))
            .collect();
        DenseSymMatrix::new(n, data).expect("diagonal congruence preserves symmetry")
    };
    let (vals, vecs) = gen_sym_eig(&rescale(a), &rescale(b)).map_err(|e| match e {
        NumericsError::NotPositiveDefinite { .. } => SolverError::IllConditioned,
        other => SolverError::Assembly(other.to_string()),
    })?;
    let vecs = vecs
        .into_iter()
        .map(|y| y.iter().zip(d.iter()).map(|(yi, di)| yi / di).collect())
        .collect();
    Ok((vals, vecs))
}

fn quadratic_form(m: &DenseSymMatrix, v: &[f64]) -> f64 {
    let mv = m.matvec(v);
    v.iter().zip(mv.iter()).map(|(x, y)| x * y).sum()
}

/// Solve the order-l buckling problem on `domain`, returning the lowest
/// `count` eigenpairs with Dirichlet-normalized eigenvectors, modal tags on
/// separable domains, and the full moment chain per eigenpair.
pub fn solve_buckling(
    domain: &DomainSpec,
    order: u32,
    basis_size: usize,
    count: usize,
    m_max: Option<u32>,
) -> Result<EigenSolution, SolverError> {
    domain
        .validate()
        .map_err(SolverError::InvalidArgument)?;
    if order < 2 {
        return Err(SolverError::InvalidArgument(format!(
            "order {order} < 2"
        )));
    }
    let l = order as usize;
    match domain {
        DomainSpec::Interval { length } => {
            solve_box(domain, order, &[*length], basis_size, count)
        }
        DomainSpec::Rectangle { sides } => {
            if !(sides.len() == 2 || sides.len() == 3) {
                return Err(SolverError::InvalidArgument(format!(
                    "rectangle dimension {} outside {{2, 3}}",
                    sides.len()
                )));
            }
            solve_box(domain, order, sides, basis_size, count)
        }
        DomainSpec::Disc { radius } => solve_radial(
            domain,
            RadialGeometry::Disc,
            order,
            basis_size,
            count,
            m_max.unwrap_or(DEFAULT_M_MAX.max(count as u32)),
            *radius,
        ),
        DomainSpec::SphericalCap { theta0 } => solve_radial(
            domain,
            RadialGeometry::Cap { x0: theta0.cos() },
            order,
            basis_size,
            count,
            m_max.unwrap_or(DEFAULT_M_MAX.max(count as u32)),
            1.0,
        ),
    }
    .map(|mut sol| {
        debug_assert_eq!(sol.moments.len(), sol.eigenvalues.len());
        // mu_1 = 1 and mu_l = Lambda_i are solver self-checks
        for (i, mu) in sol.moments.iter().enumerate() {
            debug_assert!((mu[0] - 1.0).abs() < 1e-6, "mu_1 = {}", mu[0]);
            debug_assert!(
                (mu[l - 1] - sol.eigenvalues[i]).abs()
                    <= 1e-6 * sol.eigenvalues[i].abs().max(1.0)
            );
        }
        sol.order = order;
        sol
    })
}

fn solve_box(
    domain: &DomainSpec,
    order: u32,
    sides: &[f64],
    basis_size: usize,
    count: usize,
) -> Result<EigenSolution, SolverError> {
    if basis_size < 1 || basis_size > rectangle::MAX_BASIS_1D {
        return Err(SolverError::InvalidArgument(format!(
            "basis size {basis_size} outside 1..={}",
            rectangle::MAX_BASIS_1D
        )));
    }
    let l = order as usize;
    let basis = GalerkinBasis1D::new(order, basis_size);
    let total = basis_size.pow(sides.len() as u32);
    if count > total {
        return Err(SolverError::CountExceedsBasis { count, available: total });
    }
    let a = tensor_form(&basis, sides, l)?;
    let b = tensor_form(&basis, sides, 1)?;
    let (vals, vecs) = eig(&a, &b)?;
    let kept_vals: Vec<f64> = vals[..count].to_vec();
    let kept_vecs: Vec<Vec<f64>> = vecs[..count].to_vec();
    // moment chain via the same form machinery at orders 1..=l
    let mut forms = Vec::with_capacity(l);
    for k in 1..=l {
        forms.push(if k == 1 {
            b.clone()
        } else if k == l {
            a.clone()
        } else {
            tensor_form(&basis, sides, k)?
        });
    }
    let moments = kept_vecs
        .iter()
        .map(|v| forms.iter().map(|f| quadratic_form(f, v)).collect())
        .collect();
    Ok(EigenSolution {
        domain: domain.clone(),
        order,
        eigenvalues: kept_vals,
        eigenvectors: kept_vecs,
        modal_tags: None,
        moments,
        completeness_warning: false,
    })
}

fn solve_radial(
    domain: &DomainSpec,
    geometry: RadialGeometry,
    order: u32,
    basis_size: usize,
    count: usize,
    m_max: u32,
    radius: f64,
) -> Result<EigenSolution, SolverError> {
    let l = order as usize;
    struct Candidate {
        value: f64,
        m: u32,
        mode_index: usize,
        vec: Vec<f64>,
    }
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut bases: Vec<RadialBasis> = Vec::new();
    let mut lowest_of_last_mode = f64::INFINITY;
    for m in 0..=m_max {
        let basis = RadialBasis::new(geometry, order, m, basis_size)?;
        let mut a = mode_form(&basis, l)?;
        let b = mode_form(&basis, 1)?;
        if let RadialGeometry::Disc = geometry {
            a = scale_matrix(&a, radius.powi(2 - 2 * l as i32));
        }
        let (vals, vecs) = eig(&a, &b)?;
        if m == m_max {
            lowest_of_last_mode = vals.first().copied().unwrap_or(f64::INFINITY);
        }
        let copies = if m == 0 { 1 } else { 2 };
        for (idx, (val, vec)) in vals.iter().zip(vecs.iter()).enumerate() {
            for _ in 0..copies {
                candidates.push(Candidate {
                    value: *val,
                    m,
                    mode_index: idx,
                    vec: vec.clone(),
                });
            }
        }
        bases.push(basis);
    }
    if count > candidates.len() {
        return Err(SolverError::CountExceedsBasis {
            count,
            available: candidates.len(),
        });
    }
    candidates.sort_by(|a, b| {
        a.value
            .partial_cmp(&b.value)
            .unwrap()
            .then(a.m.cmp(&b.m))
            .then(a.mode_index.cmp(&b.mode_index))
    });
    let kept = &candidates[..count];
    let completeness_warning = kept
        .last()
        .map(|c| c.value > lowest_of_last_mode)
        .unwrap_or(false);

    // per-mode moment forms, built once per mode that contributed
    let mut mode_forms: Vec<Option<Vec<DenseSymMatrix>>> = vec![None; (m_max + 1) as usize];
    let mut moments = Vec::with_capacity(count);
    for c in kept {
        let slot = &mut mode_forms[c.m as usize];
        if slot.is_none() {
            let mut forms = Vec::with_capacity(l);
            for k in 1..=l {
                let mut f = mode_form(&bases[c.m as usize], k)?;
                if let RadialGeometry::Disc = geometry {
                    f = scale_matrix(&f, radius.powi(2 - 2 * k as i32));
                }
                forms.push(f);
            }
            *slot = Some(forms);
        }
        let forms = slot.as_ref().unwrap();
        moments.push(forms.iter().map(|f| quadratic_form(f, &c.vec)).collect());
    }
    Ok(EigenSolution {
        domain: domain.clone(),
        order,
        eigenvalues: kept.iter().map(|c| c.value).collect(),
        eigenvectors: kept.iter().map(|c| c.vec.clone()).collect(),
        modal_tags: Some(kept.iter().map(|c| c.m).collect()),
        moments,
        completeness_warning,
    })
}

/// The moment chain mu_1 .. mu_l of eigenpair `i`.
pub fn moments(solution: &EigenSolution, i: usize) -> Result<&[f64], SolverError> {
    solution
        .moments
        .get(i)
        .map(|m| m.as_slice())
        .ok_or(SolverError::IndexOutOfRange(i))
}

/// Per-N spectra and successive relative differences for a nested-basis
/// refinement study.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub basis_sizes: Vec<usize>,
    pub spectra: Vec<Vec<f64>>,
    /// max over refinement steps of |Lambda_new - Lambda_old| / Lambda_new,
    /// per eigenvalue index
    pub max_rel_change: Vec<f64>,
}

pub fn convergence_sweep(
    domain: &DomainSpec,
    order: u32,
    basis_sizes: &[usize],
    count: usize,
    m_max: Option<u32>,
) -> Result<SweepResult, SolverError> {
    if basis_sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(SolverError::InvalidArgument(
            "basis size list must be strictly increasing".into(),
        ));
    }
    let mut spectra = Vec::with_capacity(basis_sizes.len());
    for &n in basis_sizes {
        let sol = solve_buckling(domain, order, n, count, m_max)?;
        spectra.push(sol.eigenvalues);
    }
    let mut max_rel_change = vec![0.0_f64; count];
    for w in spectra.windows(2) {
        for i in 0..count.min(w[0].len()).min(w[1].len()) {
            let rel = (w[1][i] - w[0][i]).abs() / w[1][i].abs().max(f64::MIN_POSITIVE);
            max_rel_change[i] = max_rel_change[i].max(rel);
        }
    }
    if spectra.len() < 2 {
        max_rel_change.clear();
    }
    Ok(SweepResult {
        basis_sizes: basis_sizes.to_vec(),
        spectra,
        max_rel_change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_fundamental_is_four_pi_squared() {
        let sol = solve_buckling(&DomainSpec::Interval { length: 1.0 }, 2, 16, 2, None).unwrap();
        let four_pi_sq = 4.0 * std::f64::consts::PI * std::f64::consts::PI;
        assert!(
            (sol.eigenvalues[0] - four_pi_sq).abs() <= 1e-8 * four_pi_sq,
            "got {}",
            sol.eigenvalues[0]
        );
    }

    #[test]
    fn count_zero_gives_empty_solution() {
        let sol = solve_buckling(&DomainSpec::Interval { length: 1.0 }, 2, 8, 0, None).unwrap();
        assert!(sol.eigenvalues.is_empty());
        assert!(sol.moments.is_empty());
    }

    #[test]
    fn count_beyond_basis_rejected() {
        let err = solve_buckling(&DomainSpec::Interval { length: 1.0 }, 2, 4, 5, None);
        assert!(matches!(err, Err(SolverError::CountExceedsBasis { .. })));
    }

    #[test]
    fn moments_self_checks() {
        let sol = solve_buckling(&DomainSpec::Interval { length: 1.0 }, 3, 14, 4, None).unwrap();
        for (i, lam) in sol.eigenvalues.iter().enumerate() {
            let mu = moments(&sol, i).unwrap();
            assert!((mu[0] - 1.0).abs() < 1e-8);
            assert!((mu[2] - lam).abs() <= 1e-8 * lam);
        }
        assert!(moments(&sol, 99).is_err());
    }

    #[test]
    fn disc_modes_carry_multiplicity_two() {
        let sol = solve_buckling(&DomainSpec::Disc { radius: 1.0 }, 2, 10, 6, Some(4)).unwrap();
        let tags = sol.modal_tags.as_ref().unwrap();
        // every m >= 1 eigenvalue appears twice, back to back
        let mut i = 0;
        while i < tags.len() {
            if tags[i] >= 1 {
                assert!(i + 1 < tags.len(), "truncated multiplicity pair");
                assert_eq!(tags[i], tags[i + 1]);
                assert_eq!(sol.eigenvalues[i], sol.eigenvalues[i + 1]);
                i += 2;
            } else {
                i += 1;
            }
        }
    }

    #[test]
    fn interval_scaling_covariance() {
        let s1 = solve_buckling(&DomainSpec::Interval { length: 1.0 }, 2, 12, 3, None).unwrap();
        let s2 = solve_buckling(&DomainSpec::Interval { length: 2.0 }, 2, 12, 3, None).unwrap();
        for (a, b) in s1.eigenvalues.iter().zip(s2.eigenvalues.iter()) {
            // Lambda ~ length^{-2(l-1)}
            assert!((b * 4.0 - a).abs() <= 1e-8 * a);
        }
    }

    #[test]
    fn sweep_is_monotone_for_nested_bases() {
        let sweep = convergence_sweep(
            &DomainSpec::Interval { length: 1.0 },
            2,
            &[8, 12, 16],
            2,
            None,
        )
        .unwrap();
        for w in sweep.spectra.windows(2) {
            for i in 0..2 {
                assert!(w[1][i] <= w[0][i] * (1.0 + 1e-10));
            }
        }
        let single = convergence_sweep(
            &DomainSpec::Interval { length: 1.0 },
            2,
            &[8],
            2,
            None,
        )
        .unwrap();
        assert!(single.max_rel_change.is_empty());
    }

    #[test]
    fn radial_eigenvectors_b_orthonormal() {
        let sol = solve_buckling(&DomainSpec::SphericalCap { theta0: 1.0 }, 2, 8, 4, Some(3)).unwrap();
        for mu in &sol.moments {
            assert!((mu[0] - 1.0).abs() < 1e-9);
        }
    }
}
