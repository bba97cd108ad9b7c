//! Flat-file JSON formats: "buckle-spectrum/1", "buckle-report/1",
//! "buckle-solution/1".

use serde::{Deserialize, Serialize};

use crate::spectrum::{BoundReportEntry, DomainSpec, EigenSolution, Geometry, Spectrum, SpectrumError};

pub const SPECTRUM_FORMAT: &str = "buckle-spectrum/1";
pub const REPORT_FORMAT: &str = "buckle-report/1";
pub const SOLUTION_FORMAT: &str = "buckle-solution/1";

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unexpected format tag {found:?}, expected {expected:?}")]
    BadFormat { expected: &'static str, found: String },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub format: String,
    pub geometry: Geometry,
    pub dimension: u32,
    pub order: u32,
    pub eigenvalues: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainSpec>,
    pub normalization: String,
}

impl SpectrumFile {
    pub fn from_spectrum(spectrum: &Spectrum, domain: Option<DomainSpec>) -> Self {
        Self {
            format: SPECTRUM_FORMAT.to_string(),
            geometry: spectrum.geometry(),
            dimension: spectrum.dimension(),
            order: spectrum.order(),
            eigenvalues: spectrum.values().to_vec(),
            domain,
            normalization: "dirichlet".to_string(),
        }
    }

    pub fn to_spectrum(&self) -> Result<Spectrum, IoError> {
        if self.format != SPECTRUM_FORMAT {
            return Err(IoError::BadFormat {
                expected: SPECTRUM_FORMAT,
                found: self.format.clone(),
            });
        }
        Ok(Spectrum::validate(
            self.geometry,
            self.dimension,
            self.order,
            self.eigenvalues.clone(),
        )?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: String,
    pub geometry: Geometry,
    pub dimension: u32,
    pub order: u32,
    pub entries: Vec<BoundReportEntry>,
}

impl ReportFile {
    pub fn new(spectrum: &Spectrum, entries: Vec<BoundReportEntry>) -> Self {
        Self {
            format: REPORT_FORMAT.to_string(),
            geometry: spectrum.geometry(),
            dimension: spectrum.dimension(),
            order: spectrum.order(),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let file: Self = serde_json::from_str(text)?;
        if file.format != REPORT_FORMAT {
            return Err(IoError::BadFormat {
                expected: REPORT_FORMAT,
                found: file.format,
            });
        }
        Ok(file)
    }
}

/// Solution dump with eigenvector coefficients for moment re-checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionFile {
    pub format: String,
    pub domain: DomainSpec,
    pub order: u32,
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modal_tags: Option<Vec<u32>>,
    pub moments: Vec<Vec<f64>>,
    pub completeness_warning: bool,
}

impl SolutionFile {
    pub fn from_solution(solution: &EigenSolution) -> Self {
        Self {
            format: SOLUTION_FORMAT.to_string(),
            domain: solution.domain.clone(),
            order: solution.order,
            eigenvalues: solution.eigenvalues.clone(),
            eigenvectors: solution.eigenvectors.clone(),
            modal_tags: solution.modal_tags.clone(),
            moments: solution.moments.clone(),
            completeness_warning: solution.completeness_warning,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let file: Self = serde_json::from_str(text)?;
        if file.format != SOLUTION_FORMAT {
            return Err(IoError::BadFormat {
                expected: SOLUTION_FORMAT,
                found: file.format,
            });
        }
        Ok(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_round_trip_is_exact() {
        let s = Spectrum::validate(
            Geometry::Euclidean,
            2,
            2,
            vec![39.47841760435743, 80.76283537894738],
        )
        .unwrap();
        let file = SpectrumFile::from_spectrum(&s, Some(DomainSpec::Interval { length: 1.0 }));
        let text = file.to_json();
        let back = SpectrumFile::from_json(&text).unwrap().to_spectrum().unwrap();
        // bit-exact round trip via shortest round-trip decimals
        assert_eq!(s.values(), back.values());
        assert_eq!(text, SpectrumFile::from_json(&text).unwrap().to_json());
    }

    #[test]
    fn bad_format_tag_rejected() {
        let s = Spectrum::validate(Geometry::Sphere, 2, 2, vec![2.0]).unwrap();
        let mut file = SpectrumFile::from_spectrum(&s, None);
        file.format = "other/9".to_string();
        assert!(matches!(
            file.to_spectrum(),
            Err(IoError::BadFormat { .. })
        ));
    }
}
