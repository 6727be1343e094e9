//! Independent reference solvers used to cross-check the main eigensolvers,
//! plus seeded random potential families for property tests.
//!
//! Everything here is deliberately built on different numerics than the
//! crates it checks: the shooting method integrates the ODE phase, the
//! transfer-matrix residual propagates fundamental solutions. No code is
//! shared with the finite-difference or secular-equation paths.

pub mod families;
pub mod prufer;
pub mod rng;
pub mod transfer;

pub use prufer::{shoot_eigenvalue, Bc};
pub use transfer::step_residual;
