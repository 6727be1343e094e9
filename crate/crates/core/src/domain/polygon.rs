use crate::error::{Result, SpectralError};

/// Strictly convex polygon given by counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygonDomain {
    vertices: Vec<[f64; 2]>,
}

impl ConvexPolygonDomain {
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(SpectralError::InvalidDomain(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().flatten().any(|v| !v.is_finite()) {
            return Err(SpectralError::InvalidDomain(
                "polygon vertices must be finite".into(),
            ));
        }
        let n = vertices.len();
        let mut area2 = 0.0;
        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            let r = vertices[(i + 2) % n];
            let cross = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0]);
            if cross <= 0.0 {
                return Err(SpectralError::InvalidDomain(format!(
                    "vertices must wind counterclockwise and be strictly convex \
                     (cross product {cross:.3e} at vertex {i})"
                )));
            }
            area2 += p[0] * q[1] - q[0] * p[1];
        }
        if area2 <= 1e-300 {
            return Err(SpectralError::InvalidDomain("degenerate area".into()));
        }
        Ok(ConvexPolygonDomain { vertices })
    }

    /// Axis-aligned square (a, b)^2.
    pub fn square(a: f64, b: f64) -> Result<Self> {
        Self::new(vec![[a, a], [b, a], [b, b], [a, b]])
    }

    /// Regular polygon with `sides` vertices on a circle of the given radius,
    /// first vertex on the positive x-axis.
    pub fn regular(sides: usize, radius: f64) -> Result<Self> {
        let verts = (0..sides)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / sides as f64;
                [radius * t.cos(), radius * t.sin()]
            })
            .collect();
        Self::new(verts)
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut area2 = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            area2 += p[0] * q[1] - q[0] * p[1];
        }
        0.5 * area2
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for v in &self.vertices {
            for d in 0..2 {
                lo[d] = lo[d].min(v[d]);
                hi[d] = hi[d].max(v[d]);
            }
        }
        (lo, hi)
    }

    /// Strict interior test with a relative margin.
    pub fn contains_interior(&self, p: [f64; 2], margin: f64) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            if cross <= margin {
                return false;
            }
        }
        true
    }

    /// Whether the vertex set maps to itself under negation of the given
    /// coordinate (0: (x,y) -> (-x,y), 1: (x,y) -> (x,-y)), within
    /// absolute tolerance 1e-12.
    pub fn symmetric_about_axis(&self, axis: usize) -> bool {
        let tol = 1e-12;
        self.vertices.iter().all(|v| {
            let refl = if axis == 0 {
                [-v[0], v[1]]
            } else {
                [v[0], -v[1]]
            };
            self.vertices
                .iter()
                .any(|w| (w[0] - refl[0]).abs() <= tol && (w[1] - refl[1]).abs() <= tol)
        })
    }
}
