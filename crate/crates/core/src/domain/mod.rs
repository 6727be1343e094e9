//! Shared domain model: intervals, convex polygons, boundary conditions,
//! potentials with verified structural metadata, and spectral result types.
//!
//! Everything here is immutable after construction and safe to share across
//! concurrent solver invocations.

mod bc;
mod interval;
mod polygon;
mod potential1d;
mod potential2d;
mod registry;
mod spectrum;

pub use bc::{BoundaryCondition, BoundaryKind2D, BoundaryPair};
pub use interval::IntervalDomain;
pub use polygon::ConvexPolygonDomain;
pub use potential1d::{ConvexityFlag, Descriptor1D, Meta1D, MonotoneFlag, Potential1D, TriFlag};
pub use potential2d::{Meta2D, Potential2D};
pub use registry::{builtin_names, make_named_potential, scale_shift_potential, AnyPotential, DomainSpec};
pub use spectrum::{BcSelector, Discretization, Eigenpair, SpectrumResult};
