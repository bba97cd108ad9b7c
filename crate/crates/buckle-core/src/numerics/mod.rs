//! Self-contained numerical kernels: quadrature, dense symmetric
//! factorizations and eigensolvers, and polynomial arithmetic.

mod gauss;
mod intpoly;
mod matrix;
mod poly;

pub use gauss::{gauss_legendre, integrate};
pub use intpoly::IntPolynomial;
pub use matrix::{cholesky, gen_sym_eig, sym_eig, DenseSymMatrix};
pub use poly::RealPolynomial;

#[derive(Debug, thiserror::Error)]
pub enum NumericsError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix not positive definite (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },
    #[error("integer overflow in exact polynomial arithmetic")]
    IntegerOverflow,
}
