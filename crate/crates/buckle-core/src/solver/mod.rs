//! Conforming Galerkin eigensolver for the order-l buckling problem
//! (-Delta)^l u = -Lambda Delta u with clamped boundary conditions, on
//! intervals, rectangles, discs, and spherical caps.

pub mod basis;
pub mod radial;
pub mod rectangle;
pub mod solve;

pub use basis::{derivative_gram, GalerkinBasis1D};
pub use radial::{assemble_modal, radial_laplacian_apply, RadialBasis, RadialGeometry};
pub use rectangle::{assemble_interval, assemble_rectangle};
pub use solve::{convergence_sweep, moments, solve_buckling, SweepResult};

use crate::numerics::DenseSymMatrix;

/// The order-l form A and the Dirichlet form B of a Galerkin discretization.
#[derive(Debug, Clone)]
pub struct AssembledForms {
    pub a: DenseSymMatrix,
    pub b: DenseSymMatrix,
}

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("assembly failed: {0}")]
    Assembly(String),
    #[error("basis too ill-conditioned, reduce N")]
    IllConditioned,
    #[error("requested {count} eigenpairs but only {available} are available")]
    CountExceedsBasis { count: usize, available: usize },
    #[error("eigenpair index {0} out of range")]
    IndexOutOfRange(usize),
}
