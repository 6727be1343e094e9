//! Spectral toolkit for Schroedinger operators -Delta + V with Neumann,
//! Dirichlet and mixed boundary conditions on bounded intervals and convex
//! polygons: finite-difference and finite-element eigensolvers, an exact
//! secular-equation solver for the two-piece step potential,
//! Hellmann-Feynman eigenvalue derivatives, and verifiers for the
//! eigenvalue-ordering properties that monotone/convex/concave potential
//! structure implies.

pub mod domain;
pub mod eig1d;
pub mod error;
pub mod fem2d;
pub mod linalg;
pub mod perturbation;
pub mod quad;
pub mod report;
pub mod step_analytic;
pub mod verify1d;

pub use error::{Result, SpectralError};
