//! Shared domain types: spectra, domains, bound reports, eigensolutions.

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SpectrumError {
    #[error("eigenvalue list is empty")]
    Empty,
    #[error("eigenvalue {value} at index {index} is not positive")]
    NonPositive { index: usize, value: f64 },
    #[error("dimension {0} is out of range")]
    BadDimension(u32),
    #[error("order {0} is out of range (need l >= 2)")]
    BadOrder(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclidean,
    Sphere,
}

/// Canonical computational domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DomainSpec {
    Interval { length: f64 },
    Rectangle { sides: Vec<f64> },
    Disc { radius: f64 },
    SphericalCap { theta0: f64 },
}

impl DomainSpec {
    pub fn validate(&self) -> Result<(), String> {
        match self {
            DomainSpec::Interval { length } if *length > 0.0 => Ok(()),
            DomainSpec::Interval { length } => Err(format!("interval length {length} <= 0")),
            DomainSpec::Rectangle { sides } => {
                if sides.is_empty() {
                    return Err("rectangle needs at least one side".into());
                }
                if let Some(s) = sides.iter().find(|s| **s <= 0.0) {
                    return Err(format!("rectangle side {s} <= 0"));
                }
                Ok(())
            }
            DomainSpec::Disc { radius } if *radius > 0.0 => Ok(()),
            DomainSpec::Disc { radius } => Err(format!("disc radius {radius} <= 0")),
            DomainSpec::SphericalCap { theta0 }
                if *theta0 > 0.0 && *theta0 < std::f64::consts::PI =>
            {
                Ok(())
            }
            DomainSpec::SphericalCap { theta0 } => {
                Err(format!("cap polar angle {theta0} outside (0, pi)"))
            }
        }
    }

    pub fn geometry(&self) -> Geometry {
        match self {
            DomainSpec::SphericalCap { .. } => Geometry::Sphere,
            _ => Geometry::Euclidean,
        }
    }

    /// Ambient dimension of the domain.
    pub fn dimension(&self) -> u32 {
        match self {
            DomainSpec::Interval { .. } => 1,
            DomainSpec::Rectangle { sides } => sides.len() as u32,
            DomainSpec::Disc { .. } => 2,
            DomainSpec::SphericalCap { .. } => 2,
        }
    }
}

/// Validated ascending list of positive eigenvalues with geometry tags.
///
/// Immutable after construction. Euclidean spectra accept n >= 1 so that
/// interval spectra can flow through the Euclidean bound machinery; sphere
/// spectra require n >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    geometry: Geometry,
    dimension: u32,
    order: u32,
    values: Vec<f64>,
    resorted: bool,
}

impl Spectrum {
    /// Validate raw data into a `Spectrum`. Ordering violations within
    /// relative tolerance 1e-12 are re-sorted ascending with a warning flag.
    pub fn validate(
        geometry: Geometry,
        dimension: u32,
        order: u32,
        values: Vec<f64>,
    ) -> Result<Self, SpectrumError> {
        let min_dim = match geometry {
            Geometry::Euclidean => 1,
            Geometry::Sphere => 2,
        };
        if dimension < min_dim {
            return Err(SpectrumError::BadDimension(dimension));
        }
        if order < 2 {
            return Err(SpectrumError::BadOrder(order));
        }
        if values.is_empty() {
            return Err(SpectrumError::Empty);
        }
        for (index, &value) in values.iter().enumerate() {
            if !(value > 0.0) || !value.is_finite() {
                return Err(SpectrumError::NonPositive { index, value });
            }
        }
        let mut resorted = false;
        let mut vals = values;
        if vals.windows(2).any(|w| w[1] < w[0]) {
            vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            resorted = true;
        }
        Ok(Self {
            geometry,
            dimension,
            order,
            values: vals,
            resorted,
        })
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when validation had to re-sort the input.
    pub fn was_resorted(&self) -> bool {
        self.resorted
    }
}

/// Per-k record of residuals, closed-form bounds, and tightness ratios.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReportEntry {
    pub k: usize,
    pub lambda_next_computed: Option<f64>,
    /// None when no Lambda_{k+1} is available (k = spectrum length).
    pub thm_residual: Option<f64>,
    pub bound_a: Option<f64>,
    pub bound_b: Option<f64>,
    pub tightness_a: Option<f64>,
    pub tightness_b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_at_delta_star: Option<f64>,
}

/// Eigenpairs plus the moment chain mu_k = int u (-Delta)^k u.
#[derive(Debug, Clone)]
pub struct EigenSolution {
    pub domain: DomainSpec,
    pub order: u32,
    pub eigenvalues: Vec<f64>,
    /// Basis coefficients per eigenpair, Dirichlet-normalized.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Azimuthal index per eigenpair on separable domains.
    pub modal_tags: Option<Vec<u32>>,
    /// Per eigenpair, mu_1 .. mu_l.
    pub moments: Vec<Vec<f64>>,
    /// Set when the modal truncation may have missed lower modes.
    pub completeness_warning: bool,
}

impl EigenSolution {
    pub fn to_spectrum(&self) -> Result<Spectrum, SpectrumError> {
        Spectrum::validate(
            self.domain.geometry(),
            self.domain.dimension(),
            self.order,
            self.eigenvalues.clone(),
        )
    }
}
