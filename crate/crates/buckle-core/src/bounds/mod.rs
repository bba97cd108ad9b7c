//! Universal eigenvalue bounds for buckling spectra, split by geometry.

pub mod euclidean;
pub mod sphere;

pub use euclidean::{
    chengyang_residual, coefficient_c, cor11_bounds, lemma22_residual,
    reverse_chebyshev_residual, thm11_residual,
};
pub use sphere::{
    aj_coefficients, cor12_bound, delta_grid, fg_polys, h_value, optimal_delta,
    per_i_factor_old, per_i_factor_sharp, thm12_residual, wx_comparator, SphereBound,
    SphereRecursion,
};

#[derive(Debug, thiserror::Error)]
pub enum BoundsError {
    #[error("spectrum has the wrong geometry for this bound")]
    WrongGeometry,
    #[error("k = {k} out of range for spectrum of length {len}")]
    KOutOfRange { k: usize, len: usize },
    #[error("operator order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: u32, found: u32 },
    #[error("input sequences have mismatched or empty lengths")]
    LengthMismatch,
    #[error("input sequence violates the required monotonicity/sign hypotheses")]
    MonotonicityViolation,
    #[error("dimension {0} out of range (need n >= 2)")]
    DimensionOutOfRange(u32),
    #[error("recursion cross-check failed at step q = {q}")]
    RecursionMismatch { q: usize },
    #[error("combined polynomial is not monic of the expected degree")]
    NotMonic,
    #[error("integer overflow in exact polynomial arithmetic")]
    IntegerOverflow,
    #[error("precondition rho > n - 2 violated: rho = {rho}, n = {dimension}")]
    PreconditionViolated { rho: f64, dimension: u32 },
    #[error("all gaps vanish; optimal delta undefined")]
    DegenerateGaps,
    #[error("delta must be positive, got {0}")]
    NonPositiveDelta(f64),
    #[error("internal error: {0}")]
    Internal(String),
}
