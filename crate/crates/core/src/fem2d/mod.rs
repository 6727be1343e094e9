pub mod mesh;
pub mod assemble;
pub mod solve;
pub mod checks;

pub use assemble::{assemble2d, AssembledPencil};
pub use checks::{check_thm42, check_thm44_45};
pub use mesh::{mesh_polygon, TriMesh};
pub use solve::{generalized_eigs, solve_polygon, square_tensor_spectrum};
