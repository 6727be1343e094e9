use std::sync::Arc;

use super::polygon::ConvexPolygonDomain;
use crate::error::{Result, SpectralError};
use crate::linalg::sym2x2_eigenvalues;

pub type Eval2Fn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
pub type Grad2Fn = Arc<dyn Fn(f64, f64) -> [f64; 2] + Send + Sync>;
pub type Hess2Fn = Arc<dyn Fn(f64, f64) -> [[f64; 2]; 2] + Send + Sync>;

/// Structural facts about a 2D potential. `gradient_orthogonal_subspace`
/// holds a unit vector f with grad V _|_ f a.e. (so V is constant along f);
/// `axis_symmetric` records evenness in x1 and x2 separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Meta2D {
    pub gradient_orthogonal_subspace: Option<[f64; 2]>,
    pub axis_symmetric: (bool, bool),
    pub concave: bool,
    pub is_constant: bool,
}

#[derive(Clone)]
pub struct Potential2D {
    eval: Eval2Fn,
    grad: Option<Grad2Fn>,
    hessian: Option<Hess2Fn>,
    meta: Meta2D,
    domain: ConvexPolygonDomain,
    sup_abs: f64,
    hessian_negative_definite: Option<bool>,
    name: String,
}

impl std::fmt::Debug for Potential2D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Potential2D")
            .field("name", &self.name)
            .field("meta", &self.meta)
            .finish()
    }
}

const GRID: usize = 32;

fn interior_grid(poly: &ConvexPolygonDomain) -> Vec<[f64; 2]> {
    let (lo, hi) = poly.bounding_box();
    let margin = 1e-9 * ((hi[0] - lo[0]) + (hi[1] - lo[1]));
    let mut pts = Vec::new();
    for j in 0..GRID {
        for i in 0..GRID {
            let p = [
                lo[0] + (hi[0] - lo[0]) * (i as f64 + 0.5) / GRID as f64,
                lo[1] + (hi[1] - lo[1]) * (j as f64 + 0.5) / GRID as f64,
            ];
            if poly.contains_interior(p, margin) {
                pts.push(p);
            }
        }
    }
    pts
}

impl Potential2D {
    pub fn new(
        domain: ConvexPolygonDomain,
        name: impl Into<String>,
        eval: Eval2Fn,
        grad: Option<Grad2Fn>,
        hessian: Option<Hess2Fn>,
        mut meta: Meta2D,
    ) -> Result<Self> {
        let name = name.into();
        let pts = interior_grid(&domain);
        let mut sup_abs = 0.0f64;
        for &[x, y] in pts.iter().chain(domain.vertices()) {
            let v = eval(x, y);
            if !v.is_finite() {
                return Err(SpectralError::UnboundedPotential { x: vec![x, y] });
            }
            sup_abs = sup_abs.max(v.abs());
        }

        // declared metadata is checked against the sample grid, a
        // contradiction is a hard error
        if let Some(f) = meta.gradient_orthogonal_subspace {
            let norm = (f[0] * f[0] + f[1] * f[1]).sqrt();
            if norm < 1e-14 {
                return Err(SpectralError::InvalidArgument(
                    "gradient_orthogonal_subspace must be a nonzero vector".into(),
                ));
            }
            let f = [f[0] / norm, f[1] / norm];
            meta.gradient_orthogonal_subspace = Some(f);
            if let Some(g) = &grad {
                for &[x, y] in &pts {
                    let gv = g(x, y);
                    let gn = (gv[0] * gv[0] + gv[1] * gv[1]).sqrt();
                    let dot = gv[0] * f[0] + gv[1] * f[1];
                    if dot.abs() > 1e-10 * (1.0 + gn) {
                        return Err(SpectralError::MetaInconsistent(format!(
                            "grad V . f = {dot:.3e} at ({x:.3}, {y:.3})"
                        )));
                    }
                }
            }
        }
        let mut neg_def = None;
        if let Some(h) = &hessian {
            let mut definite = true;
            for &[x, y] in &pts {
                let m = h(x, y);
                let [_, top] = sym2x2_eigenvalues(m);
                let scale = m
                    .iter()
                    .flatten()
                    .fold(0.0f64, |acc, &e| acc.max(e.abs()));
                if meta.concave && top > 1e-10 * (1.0 + scale) {
                    return Err(SpectralError::MetaInconsistent(format!(
                        "concave flag set but a Hessian eigenvalue is {top:.3e} at ({x:.3}, {y:.3})"
                    )));
                }
                if top > -1e-12 * (1.0 + scale) {
                    definite = false;
                }
            }
            neg_def = Some(definite);
        }
        for axis in 0..2 {
            let claimed = if axis == 0 {
                meta.axis_symmetric.0
            } else {
                meta.axis_symmetric.1
            };
            if claimed {
                for &[x, y] in &pts {
                    let refl = if axis == 0 { [-x, y] } else { [x, -y] };
                    if !domain.contains_interior(refl, 0.0) {
                        continue;
                    }
                    let diff = (eval(x, y) - eval(refl[0], refl[1])).abs();
                    if diff > 1e-12 * (1.0 + sup_abs) {
                        return Err(SpectralError::MetaInconsistent(format!(
                            "axis-{axis} symmetry flag set but V differs by {diff:.3e}"
                        )));
                    }
                }
            }
        }
        // is_constant is derived, never trusted
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &[x, y] in &pts {
            let v = eval(x, y);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        meta.is_constant = hi - lo <= 1e-10 * (1.0 + sup_abs);

        Ok(Potential2D {
            eval,
            grad,
            hessian,
            meta,
            domain,
            sup_abs,
            hessian_negative_definite: neg_def,
            name,
        })
    }

    pub fn constant(domain: ConvexPolygonDomain, value: f64) -> Result<Self> {
        Self::new(
            domain,
            "const",
            Arc::new(move |_, _| value),
            Some(Arc::new(|_, _| [0.0, 0.0])),
            Some(Arc::new(|_, _| [[0.0, 0.0], [0.0, 0.0]])),
            Meta2D {
                gradient_orthogonal_subspace: None,
                axis_symmetric: (true, true),
                concave: true,
                is_constant: true,
            },
        )
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    pub fn grad(&self, x: f64, y: f64) -> Option<[f64; 2]> {
        self.grad.as_ref().map(|g| g(x, y))
    }

    pub fn hessian(&self, x: f64, y: f64) -> Option<[[f64; 2]; 2]> {
        self.hessian.as_ref().map(|h| h(x, y))
    }

    pub fn meta(&self) -> &Meta2D {
        &self.meta
    }

    pub fn domain(&self) -> &ConvexPolygonDomain {
        &self.domain
    }

    pub fn sup_abs(&self) -> f64 {
        self.sup_abs
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Whether the Hessian was strictly negative definite at every sample
    /// point (None when no Hessian is attached).
    pub fn hessian_negative_definite(&self) -> Option<bool> {
        self.hessian_negative_definite
    }

    /// tau * V + offset. The concave flag is re-derived from the scaled
    /// Hessian when one is attached, otherwise it survives only for tau >= 0.
    pub fn scale_shift(&self, tau: f64, offset: f64) -> Result<Potential2D> {
        let base = self.eval.clone();
        let eval: Eval2Fn = Arc::new(move |x, y| tau * base(x, y) + offset);
        let grad = self.grad.as_ref().map(|g| {
            let g = g.clone();
            let f: Grad2Fn = Arc::new(move |x, y| {
                let v = g(x, y);
                [tau * v[0], tau * v[1]]
            });
            f
        });
        let hessian = self.hessian.as_ref().map(|h| {
            let h = h.clone();
            let f: Hess2Fn = Arc::new(move |x, y| {
                let m = h(x, y);
                [
                    [tau * m[0][0], tau * m[0][1]],
                    [tau * m[1][0], tau * m[1][1]],
                ]
            });
            f
        });
        let concave = if tau == 0.0 {
            true
        } else if let Some(h) = &hessian {
            interior_grid(&self.domain).iter().all(|&[x, y]| {
                let m = h(x, y);
                let [_, top] = sym2x2_eigenvalues(m);
                let scale = m.iter().flatten().fold(0.0f64, |a, &e| a.max(e.abs()));
                top <= 1e-10 * (1.0 + scale)
            })
        } else if tau > 0.0 {
            self.meta.concave
        } else {
            false
        };
        let meta = Meta2D {
            gradient_orthogonal_subspace: if tau == 0.0 {
                None
            } else {
                self.meta.gradient_orthogonal_subspace
            },
            axis_symmetric: self.meta.axis_symmetric,
            concave,
            is_constant: tau == 0.0 || self.meta.is_constant,
        };
        Self::new(self.domain.clone(), self.name.clone(), eval, grad, hessian, meta)
    }
}
