//! P1 finite-element assembly of the pencil (stiffness + potential mass,
//! mass) on a triangle mesh. Stiffness and mass use the exact element
//! formulas; the potential term uses the three edge-midpoint quadrature
//! points (exact for quadratics). All three matrices share one sparsity
//! pattern. A Dirichlet condition eliminates boundary nodes; Neumann is
//! the natural condition.

use super::mesh::TriMesh;
use crate::domain::{BoundaryKind2D, Potential2D};
use crate::error::{Result, SpectralError};

#[derive(Debug, Clone)]
pub struct AssembledPencil {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    stiffness: Vec<f64>,
    mass: Vec<f64>,
    potential_mass: Vec<f64>,
    bc: BoundaryKind2D,
    node_of_dof: Vec<usize>,
}

impl AssembledPencil {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bc(&self) -> BoundaryKind2D {
        self.bc
    }

    pub fn node_of_dof(&self) -> &[usize] {
        &self.node_of_dof
    }

    fn entry(&self, values: &[f64], i: usize, j: usize) -> f64 {
        let row = &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]];
        match row.binary_search(&j) {
            Ok(pos) => values[self.row_ptr[i] + pos],
            Err(_) => 0.0,
        }
    }

    pub fn stiffness_entry(&self, i: usize, j: usize) -> f64 {
        self.entry(&self.stiffness, i, j)
    }

    pub fn mass_entry(&self, i: usize, j: usize) -> f64 {
        self.entry(&self.mass, i, j)
    }

    pub fn potential_mass_entry(&self, i: usize, j: usize) -> f64 {
        self.entry(&self.potential_mass, i, j)
    }

    pub fn mass_values(&self) -> &[f64] {
        &self.mass
    }

    pub fn potential_mass_values(&self) -> &[f64] {
        &self.potential_mass
    }

    /// Dense row-major copy of stiffness + potential mass.
    pub fn dense_operator(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                a[i * self.n + self.col_idx[idx]] = self.stiffness[idx] + self.potential_mass[idx];
            }
        }
        a
    }

    /// Dense row-major copy of the mass matrix.
    pub fn dense_mass(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                m[i * self.n + self.col_idx[idx]] = self.mass[idx];
            }
        }
        m
    }

    /// y = (S + P) x and y = M x for residual checks.
    pub fn apply_operator(&self, x: &[f64], y: &mut [f64]) {
        for i in 0..self.n {
            let mut acc = 0.0;
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += (self.stiffness[idx] + self.potential_mass[idx]) * x[self.col_idx[idx]];
            }
            y[i] = acc;
        }
    }

    pub fn apply_mass(&self, x: &[f64], y: &mut [f64]) {
        for i in 0..self.n {
            let mut acc = 0.0;
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.mass[idx] * x[self.col_idx[idx]];
            }
            y[i] = acc;
        }
    }
}

/// Assemble the P1 pencil for -Delta + V under the given boundary
/// condition.
pub fn assemble2d(
    mesh: &TriMesh,
    v: &Potential2D,
    bc: BoundaryKind2D,
) -> Result<AssembledPencil> {
    let nn = mesh.nodes().len();
    let keep = |node: usize| bc == BoundaryKind2D::Neumann || !mesh.is_boundary(node);
    let mut dof_of_node = vec![usize::MAX; nn];
    let mut node_of_dof = Vec::new();
    for node in 0..nn {
        if keep(node) {
            dof_of_node[node] = node_of_dof.len();
            node_of_dof.push(node);
        }
    }
    let n = node_of_dof.len();
    if n == 0 {
        return Err(SpectralError::InvalidDomain(
            "no degrees of freedom left after boundary elimination".into(),
        ));
    }

    // shared sparsity pattern from node adjacency
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for t in mesh.triangles() {
        for &a in t {
            for &b in t {
                if keep(a) && keep(b) {
                    let (i, j) = (dof_of_node[a], dof_of_node[b]);
                    if !neighbors[i].contains(&j) {
                        neighbors[i].push(j);
                    }
                }
            }
        }
    }
    let mut row_ptr = Vec::with_capacity(n + 1);
    let mut col_idx = Vec::new();
    row_ptr.push(0);
    for row in &mut neighbors {
        row.sort_unstable();
        col_idx.extend_from_slice(row);
        row_ptr.push(col_idx.len());
    }
    let nnz = col_idx.len();
    let mut stiffness = vec![0.0; nnz];
    let mut mass = vec![0.0; nnz];
    let mut potential_mass = vec![0.0; nnz];

    let scatter = |values: &mut Vec<f64>,
                   row_ptr: &[usize],
                   col_idx: &[usize],
                   i: usize,
                   j: usize,
                   val: f64| {
        let row = &col_idx[row_ptr[i]..row_ptr[i + 1]];
        let pos = row.binary_search(&j).expect("pattern covers all pairs");
        values[row_ptr[i] + pos] += val;
    };

    for t in mesh.triangles() {
        let p = [mesh.nodes()[t[0]], mesh.nodes()[t[1]], mesh.nodes()[t[2]]];
        let area = 0.5
            * ((p[1][0] - p[0][0]) * (p[2][1] - p[0][1])
                - (p[1][1] - p[0][1]) * (p[2][0] - p[0][0]));
        // gradient coefficients of the barycentric basis
        let b = [p[1][1] - p[2][1], p[2][1] - p[0][1], p[0][1] - p[1][1]];
        let c = [p[2][0] - p[1][0], p[0][0] - p[2][0], p[1][0] - p[0][0]];
        // edge midpoints opposite the quadrature weights
        let mids = [
            [0.5 * (p[0][0] + p[1][0]), 0.5 * (p[0][1] + p[1][1])],
            [0.5 * (p[1][0] + p[2][0]), 0.5 * (p[1][1] + p[2][1])],
            [0.5 * (p[2][0] + p[0][0]), 0.5 * (p[2][1] + p[0][1])],
        ];
        let vm: Vec<f64> = mids.iter().map(|m| v.eval(m[0], m[1])).collect();
        if vm.iter().any(|x| !x.is_finite()) {
            return Err(SpectralError::UnboundedPotential {
                x: vec![mids[0][0], mids[0][1]],
            });
        }
        // phi_i at the midpoints: 1/2 on the two edges incident to i
        let phi_at_mid = [[0.5, 0.0, 0.5], [0.5, 0.5, 0.0], [0.0, 0.5, 0.5]];
        for li in 0..3 {
            if !keep(t[li]) {
                continue;
            }
            let gi = dof_of_node[t[li]];
            for lj in 0..3 {
                if !keep(t[lj]) {
                    continue;
                }
                let gj = dof_of_node[t[lj]];
                let k = (b[li] * b[lj] + c[li] * c[lj]) / (4.0 * area);
                let m = area / 12.0 * if li == lj { 2.0 } else { 1.0 };
                let mut pv = 0.0;
                for q in 0..3 {
                    pv += area / 3.0 * vm[q] * phi_at_mid[li][q] * phi_at_mid[lj][q];
                }
                scatter(&mut stiffness, &row_ptr, &col_idx, gi, gj, k);
                scatter(&mut mass, &row_ptr, &col_idx, gi, gj, m);
                scatter(&mut potential_mass, &row_ptr, &col_idx, gi, gj, pv);
            }
        }
    }

    Ok(AssembledPencil {
        n,
        row_ptr,
        col_idx,
        stiffness,
        mass,
        potential_mass,
        bc,
        node_of_dof,
    })
}
