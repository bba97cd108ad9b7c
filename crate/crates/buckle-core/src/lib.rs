//! Buckling spectra of arbitrary order on canonical domains (intervals,
//! rectangles, discs, spherical caps) by a conforming Galerkin method,
//! together with checks of the universal eigenvalue bounds they satisfy.

pub mod bounds;
pub mod io;
pub mod numerics;
pub mod report;
pub mod solver;
pub mod spectrum;

pub use spectrum::{BoundReportEntry, DomainSpec, EigenSolution, Geometry, Spectrum};
