//! Conforming triangle meshes of convex polygons: fan triangulation from
//! the centroid followed by uniform red refinements (each triangle splits
//! into four by edge midpoints). Node ordering is deterministic.

use std::collections::BTreeMap;

use crate::domain::ConvexPolygonDomain;
use crate::error::{Result, SpectralError};

#[derive(Debug, Clone)]
pub struct TriMesh {
    nodes: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
    boundary: Vec<bool>,
    refinement_level: u32,
}

impl TriMesh {
    /// Validated mesh from raw node/triangle lists (triangles
    /// counterclockwise). Boundary nodes are detected from edges with a
    /// single adjacent triangle.
    pub fn from_parts(nodes: Vec<[f64; 2]>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mut mesh = TriMesh {
            nodes,
            triangles,
            boundary: Vec::new(),
            refinement_level: 0,
        };
        mesh.validate_and_mark_boundary()?;
        Ok(mesh)
    }

    fn validate_and_mark_boundary(&mut self) -> Result<()> {
        let n = self.nodes.len();
        let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &self.triangles {
            if t.iter().any(|&i| i >= n) {
                return Err(SpectralError::InvalidDomain(
                    "triangle refers to a missing node".into(),
                ));
            }
            if self.area(*t) <= 0.0 {
                return Err(SpectralError::InvalidDomain(format!(
                    "triangle {t:?} is degenerate or clockwise"
                )));
            }
            for e in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                let key = (e.0.min(e.1), e.0.max(e.1));
                *edge_count.entry(key).or_insert(0) += 1;
            }
        }
        self.boundary = vec![false; n];
        for (&(a, b), &count) in &edge_count {
            match count {
                1 => {
                    self.boundary[a] = true;
                    self.boundary[b] = true;
                }
                2 => {}
                _ => {
                    return Err(SpectralError::InvalidDomain(format!(
                        "non-conforming edge ({a}, {b}) shared by {count} triangles"
                    )))
                }
            }
        }
        Ok(())
    }

    fn area(&self, t: [usize; 3]) -> f64 {
        let [a, b, c] = [self.nodes[t[0]], self.nodes[t[1]], self.nodes[t[2]]];
        0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    }

    pub fn nodes(&self) -> &[[f64; 2]] {
        &self.nodes
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn is_boundary(&self, node: usize) -> bool {
        self.boundary[node]
    }

    pub fn boundary_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.boundary[i]).collect()
    }

    pub fn refinement_level(&self) -> u32 {
        self.refinement_level
    }

    pub fn triangle_area(&self, idx: usize) -> f64 {
        self.area(self.triangles[idx])
    }

    /// Uniform red refinement: every triangle splits into four, midpoint
    /// nodes are created once per edge in deterministic triangle order.
    pub fn refine(&self) -> Result<TriMesh> {
        let mut nodes = self.nodes.clone();
        let mut midpoint: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut triangles = Vec::with_capacity(4 * self.triangles.len());
        for t in &self.triangles {
            let mut mid = [0usize; 3];
            for (slot, (a, b)) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
                .into_iter()
                .enumerate()
            {
                let key = (a.min(b), a.max(b));
                let idx = *midpoint.entry(key).or_insert_with(|| {
                    let p = [
                        0.5 * (nodes[a][0] + nodes[b][0]),
                        0.5 * (nodes[a][1] + nodes[b][1]),
                    ];
                    nodes.push(p);
                    nodes.len() - 1
                });
                mid[slot] = idx;
            }
            triangles.push([t[0], mid[0], mid[2]]);
            triangles.push([t[1], mid[1], mid[0]]);
            triangles.push([t[2], mid[2], mid[1]]);
            triangles.push([mid[0], mid[1], mid[2]]);
        }
        let mut mesh = TriMesh {
            nodes,
            triangles,
            boundary: Vec::new(),
            refinement_level: self.refinement_level + 1,
        };
        mesh.validate_and_mark_boundary()?;
        Ok(mesh)
    }

    /// OFF-format text for external inspection.
    pub fn to_off(&self) -> String {
        let mut s = String::from("OFF\n");
        s.push_str(&format!("{} {} 0\n", self.nodes.len(), self.triangles.len()));
        for p in &self.nodes {
            s.push_str(&format!("{} {} 0\n", p[0], p[1]));
        }
        for t in &self.triangles {
            s.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
        }
        s
    }
}

/// Fan triangulation of the polygon from its centroid, refined `level`
/// times (each refinement quadruples the triangle count).
pub fn mesh_polygon(poly: &ConvexPolygonDomain, level: u32) -> Result<TriMesh> {
    if level > 8 {
        return Err(SpectralError::InvalidArgument(format!(
            "refinement level {level} exceeds the supported 8"
        )));
    }
    let verts = poly.vertices();
    let n = verts.len();
    let centroid = verts.iter().fold([0.0, 0.0], |acc, v| {
        [acc[0] + v[0] / n as f64, acc[1] + v[1] / n as f64]
    });
    let mut nodes: Vec<[f64; 2]> = verts.to_vec();
    nodes.push(centroid);
    let c = n;
    let triangles: Vec<[usize; 3]> = (0..n).map(|i| [i, (i + 1) % n, c]).collect();
    let mut mesh = TriMesh::from_parts(nodes, triangles)?;
    for _ in 0..level {
        mesh = mesh.refine()?;
    }
    Ok(mesh)
}
