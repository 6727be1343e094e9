//! Dense symmetric-definite eigensolver for the assembled P1 pencil and
//! the exact tensor spectrum of the square: (S + P, M) is reduced to a
//! standard symmetric problem by a Cholesky factorization of M, Householder
//! tridiagonalized, and handed to the same Sturm bisection that backs the
//! 1D solver. Deterministic; intended for desk-scale dimensions.

use crate::domain::{
    BcSelector, BoundaryKind2D, ConvexPolygonDomain, Discretization, Potential2D, SpectrumResult,
};
use crate::error::{Result, SpectralError};
use crate::fem2d::{assemble2d, mesh_polygon, AssembledPencil};
use crate::linalg;

/// Default cap on the dense problem dimension; SPECTRAL_GAP_NMAX raises it.
pub const DEFAULT_DIM_CAP: usize = 3000;

fn dim_cap() -> usize {
    std::env::var("SPECTRAL_GAP_NMAX")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

/// The `count` smallest generalized eigenvalues of the pencil, raw Galerkin
/// values (upper bounds of the continuum eigenvalues for a conforming
/// discretization).
pub fn generalized_eigs(pencil: &AssembledPencil, count: usize) -> Result<Vec<f64>> {
    let n = pencil.dim();
    let cap = dim_cap();
    if n > cap {
        return Err(SpectralError::DimensionCap { dim: n, cap });
    }
    if count == 0 || 4 * count > n {
        return Err(SpectralError::InvalidArgument(format!(
            "count = {count} out of range for dimension {n} (need count <= n/4)"
        )));
    }
    let mut m = pencil.dense_mass();
    linalg::cholesky_lower(&mut m, n)?;
    let mut a = pencil.dense_operator();
    linalg::reduce_spd_pencil(&mut a, &m, n);
    let (diag, off) = linalg::householder_tridiagonalize(&mut a, n);
    linalg::smallest_eigenvalues(&diag, &off, count)
}

/// Eigenvalues on the level-`level` mesh with error estimates from the
/// comparison against level-1 under the order-2 error model (the estimate
/// is |difference| / 3, the size of the Richardson correction).
pub fn solve_polygon(
    v: &Potential2D,
    poly: &ConvexPolygonDomain,
    bc: BoundaryKind2D,
    count: usize,
    level: u32,
) -> Result<SpectrumResult> {
    if level == 0 {
        return Err(SpectralError::InvalidArgument(
            "need refinement level >= 1 for an error estimate".into(),
        ));
    }
    let coarse_mesh = mesh_polygon(poly, level - 1)?;
    let fine_mesh = mesh_polygon(poly, level)?;
    let coarse = generalized_eigs(&assemble2d(&coarse_mesh, v, bc)?, count)?;
    let fine_pencil = assemble2d(&fine_mesh, v, bc)?;
    let fine = generalized_eigs(&fine_pencil, count)?;
    let errors: Vec<f64> = coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| (c - f).abs() / 3.0)
        .collect();
    Ok(SpectrumResult::new(
        fine,
        count,
        BcSelector::TwoD(bc),
        Discretization::Mesh {
            level,
            nodes: fine_pencil.dim(),
        },
        errors,
    ))
}

/// Exact spectrum of -Delta + V0 on the square (0, pi)^2: eigenvalues
/// m^2 + n^2 + V0 with indices over the non-negative integers for Neumann
/// and the positive integers for Dirichlet, with multiplicities.
pub fn square_tensor_spectrum(v0: f64, count: usize, bc: BoundaryKind2D) -> SpectrumResult {
    let start = match bc {
        BoundaryKind2D::Neumann => 0i64,
        BoundaryKind2D::Dirichlet => 1i64,
    };
    // m, n <= bound covers the count smallest sums of two squares
    let bound = (count as f64).sqrt().ceil() as i64 + start + 2 + count as i64 / 2;
    let mut vals = Vec::new();
    for m in start..=bound {
        for n in start..=bound {
            vals.push((m * m + n * n) as f64 + v0);
        }
    }
    vals.sort_by(f64::total_cmp);
    vals.truncate(count);
    let errors = vec![0.0; vals.len()];
    SpectrumResult::new(vals, count, BcSelector::TwoD(bc), Discretization::Analytic, errors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn pi_square() -> ConvexPolygonDomain {
        ConvexPolygonDomain::square(0.0, PI).unwrap()
    }

    #[test]
    fn tensor_spectra_reference_lists() {
        let nm = square_tensor_spectrum(0.0, 10, BoundaryKind2D::Neumann);
        assert_eq!(
            nm.eigenvalues,
            vec![0.0, 1.0, 1.0, 2.0, 4.0, 4.0, 5.0, 5.0, 8.0, 9.0]
        );
        let dd = square_tensor_spectrum(0.0, 10, BoundaryKind2D::Dirichlet);
        assert_eq!(
            dd.eigenvalues,
            vec![2.0, 5.0, 5.0, 8.0, 10.0, 10.0, 13.0, 13.0, 17.0, 17.0]
        );
        // constant shift
        let shifted = square_tensor_spectrum(3.0, 4, BoundaryKind2D::Dirichlet);
        assert_eq!(shifted.eigenvalues, vec![5.0, 8.0, 8.0, 11.0]);
    }

    #[test]
    fn tensor_gap_lambda_k_vs_mu_k_plus_2() {
        let k_max = 40;
        let mu = square_tensor_spectrum(0.0, k_max + 2, BoundaryKind2D::Neumann);
        let lam = square_tensor_spectrum(0.0, k_max, BoundaryKind2D::Dirichlet);
        for k in 1..=k_max {
            assert!(
                lam.nth(k) - mu.nth(k + 2) >= 1.0,
                "k={k}: lambda={} mu={}",
                lam.nth(k),
                mu.nth(k + 2)
            );
        }
    }

    #[test]
    fn neumann_fem_kernel_and_tensor_match() {
        let sq = pi_square();
        let v = Potential2D::constant(sq.clone(), 0.0).unwrap();
        let spec = solve_polygon(&v, &sq, BoundaryKind2D::Neumann, 6, 3).unwrap();
        assert!(spec.nth(1).abs() < 1e-10, "ground state {}", spec.nth(1));
        let exact = square_tensor_spectrum(0.0, 6, BoundaryKind2D::Neumann);
        for k in 2..=6 {
            let rel = (spec.nth(k) - exact.nth(k)) / exact.nth(k);
            assert!(rel.abs() < 0.05, "k={k}: rel {rel}");
            // Galerkin values over-estimate
            assert!(spec.nth(k) >= exact.nth(k) - 1e-10);
        }
    }

    #[test]
    fn dirichlet_fem_converges_to_tensor() {
        let sq = pi_square();
        let v = Potential2D::constant(sq.clone(), 0.0).unwrap();
        let exact = square_tensor_spectrum(0.0, 4, BoundaryKind2D::Dirichlet);
        let spec = solve_polygon(&v, &sq, BoundaryKind2D::Dirichlet, 4, 4).unwrap();
        for k in 1..=4 {
            let rel = (spec.nth(k) - exact.nth(k)) / exact.nth(k);
            assert!((0.0..0.02).contains(&rel), "k={k}: rel {rel}");
            assert!(spec.nth_error(k) > 0.0);
        }
        // the known double eigenvalue appears as a tight cluster
        let gap = spec.nth(3) - spec.nth(2);
        assert!(
            gap <= 10.0 * spec.nth_error(2).max(spec.nth_error(3)),
            "cluster gap {gap}"
        );
    }

    #[test]
    fn galerkin_values_decrease_under_refinement() {
        let sq = pi_square();
        let v = Potential2D::constant(sq.clone(), 0.0).unwrap();
        let mut prev: Option<Vec<f64>> = None;
        for level in 2..=4 {
            let mesh = mesh_polygon(&sq, level).unwrap();
            let pencil = assemble2d(&mesh, &v, BoundaryKind2D::Dirichlet).unwrap();
            let vals = generalized_eigs(&pencil, 4).unwrap();
            if let Some(p) = &prev {
                for (a, b) in vals.iter().zip(p) {
                    assert!(*a <= b + 1e-11, "refinement raised an eigenvalue");
                }
            }
            prev = Some(vals);
        }
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let sq = pi_square();
        let v = Potential2D::constant(sq.clone(), 0.0).unwrap();
        let mesh = mesh_polygon(&sq, 6).unwrap(); // 8321 nodes
        let pencil = assemble2d(&mesh, &v, BoundaryKind2D::Neumann).unwrap();
        assert!(matches!(
            generalized_eigs(&pencil, 4),
            Err(SpectralError::DimensionCap { .. })
        ));
    }

    #[test]
    fn hexagon_neumann_ground_state_is_zero() {
        let hex = ConvexPolygonDomain::regular(6, 1.0).unwrap();
        let v = Potential2D::constant(hex.clone(), 0.0).unwrap();
        let spec = solve_polygon(&v, &hex, BoundaryKind2D::Neumann, 4, 3).unwrap();
        assert!(spec.nth(1).abs() < 1e-10);
        assert_abs_diff_eq!(spec.nth_error(1), 0.0, epsilon = 1e-10);
    }
}
