use std::sync::Arc;

use super::interval::IntervalDomain;
use crate::error::{Result, SpectralError};

pub type EvalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriFlag {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneFlag {
    NonIncreasing,
    NonDecreasing,
    NotMonotone,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexityFlag {
    Convex,
    Concave,
    Neither,
    Unknown,
}

/// Structural facts about a potential, all relative to its domain:
/// symmetry is about the interval midpoint, the half-interval monotonicity
/// refers to the right half. Verifiers treat `Unknown` as "theorem
/// inapplicable" and never guess.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Meta1D {
    pub symmetric: TriFlag,
    pub monotone_right_half: MonotoneFlag,
    pub monotone_full: MonotoneFlag,
    pub convexity: ConvexityFlag,
    pub is_constant: bool,
}

impl Meta1D {
    pub fn unknown() -> Self {
        Meta1D {
            symmetric: TriFlag::Unknown,
            monotone_right_half: MonotoneFlag::Unknown,
            monotone_full: MonotoneFlag::Unknown,
            convexity: ConvexityFlag::Unknown,
            is_constant: false,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Descriptor1D {
    Named {
        name: String,
        params: Vec<f64>,
    },
    /// Left-continuous step function: value[i] on (breakpoints[i-1], breakpoints[i]].
    PiecewiseConstant {
        breakpoints: Vec<f64>,
        values: Vec<f64>,
    },
    /// Piecewise-linear interpolation of samples.
    Tabulated {
        xs: Vec<f64>,
        vs: Vec<f64>,
    },
    Scaled {
        base: Box<Descriptor1D>,
        tau: f64,
        offset: f64,
    },
    Closure,
}

/// Bounded potential on an interval with verified structural metadata.
/// Immutable and cheap to clone (closures are shared).
#[derive(Clone)]
pub struct Potential1D {
    eval: EvalFn,
    d2: Option<EvalFn>,
    descriptor: Descriptor1D,
    meta: Meta1D,
    domain: IntervalDomain,
    sup_abs: f64,
}

impl std::fmt::Debug for Potential1D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Potential1D")
            .field("descriptor", &self.descriptor)
            .field("meta", &self.meta)
            .field("domain", &self.domain)
            .finish()
    }
}

pub(crate) const CLASSIFY_CELLS: usize = 1024;

/// Sample values of `eval` at the midpoints of 1024 uniform cells. The
/// midpoint grid is symmetric about the interval midpoint and avoids
/// breakpoints of step potentials, so the left-continuity convention at
/// jumps (a measure-zero choice) cannot distort the classification.
fn midpoint_samples(eval: &dyn Fn(f64) -> f64, domain: IntervalDomain) -> Vec<f64> {
    let h = domain.length() / CLASSIFY_CELLS as f64;
    (0..CLASSIFY_CELLS)
        .map(|j| eval(domain.a() + (j as f64 + 0.5) * h))
        .collect()
}

fn classify_samples(vals: &[f64], sup_abs: f64) -> Meta1D {
    let m = vals.len();
    let tol = 1e-12 * (1.0 + sup_abs);
    let const_tol = 1e-10 * (1.0 + sup_abs);

    let symmetric = if (0..m / 2).all(|j| (vals[j] - vals[m - 1 - j]).abs() <= tol) {
        TriFlag::Yes
    } else {
        TriFlag::No
    };

    let spread = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let is_constant = spread <= const_tol;

    let mono = |slice: &[f64]| -> MonotoneFlag {
        let non_dec = slice.windows(2).all(|w| w[1] >= w[0] - tol);
        let non_inc = slice.windows(2).all(|w| w[1] <= w[0] + tol);
        match (non_inc, non_dec) {
            (true, false) => MonotoneFlag::NonIncreasing,
            (false, true) => MonotoneFlag::NonDecreasing,
            // flat within tolerance counts as weakly non-decreasing;
            // non-constancy is tracked separately
            (true, true) => MonotoneFlag::NonDecreasing,
            (false, false) => MonotoneFlag::NotMonotone,
        }
    };
    let monotone_full = mono(vals);
    let monotone_right_half = mono(&vals[m / 2..]);

    let convex = vals
        .windows(3)
        .all(|w| w[2] - 2.0 * w[1] + w[0] >= -tol);
    let concave = vals
        .windows(3)
        .all(|w| w[2] - 2.0 * w[1] + w[0] <= tol);
    let convexity = match (convex, concave) {
        (true, false) => ConvexityFlag::Convex,
        (false, true) => ConvexityFlag::Concave,
        // affine within tolerance: weakly both, report convex
        (true, true) => ConvexityFlag::Convex,
        (false, false) => ConvexityFlag::Neither,
    };

    Meta1D {
        symmetric,
        monotone_right_half,
        monotone_full,
        convexity,
        is_constant,
    }
}

fn check_declared(declared: &Meta1D, classified: &Meta1D) -> Result<()> {
    let err = |what: &str| {
        Err(SpectralError::MetaInconsistent(format!(
            "declared {what} flag contradicts the sample grid"
        )))
    };
    if declared.symmetric != TriFlag::Unknown && declared.symmetric != classified.symmetric {
        return err("symmetry");
    }
    if declared.monotone_right_half != MonotoneFlag::Unknown
        && declared.monotone_right_half != classified.monotone_right_half
    {
        return err("right-half monotonicity");
    }
    if declared.monotone_full != MonotoneFlag::Unknown
        && declared.monotone_full != classified.monotone_full
    {
        return err("monotonicity");
    }
    if declared.convexity != ConvexityFlag::Unknown && declared.convexity != classified.convexity {
        return err("convexity");
    }
    if declared.is_constant != classified.is_constant {
        return err("is_constant");
    }
    Ok(())
}

/// Keep `Unknown` entries of `declared` unknown, fill the rest from the
/// classification (which `check_declared` has already matched against it).
fn mask_unknown(declared: &Meta1D, classified: Meta1D) -> Meta1D {
    Meta1D {
        symmetric: if declared.symmetric == TriFlag::Unknown {
            TriFlag::Unknown
        } else {
            classified.symmetric
        },
        monotone_right_half: if declared.monotone_right_half == MonotoneFlag::Unknown {
            MonotoneFlag::Unknown
        } else {
            classified.monotone_right_half
        },
        monotone_full: if declared.monotone_full == MonotoneFlag::Unknown {
            MonotoneFlag::Unknown
        } else {
            classified.monotone_full
        },
        convexity: if declared.convexity == ConvexityFlag::Unknown {
            ConvexityFlag::Unknown
        } else {
            classified.convexity
        },
        is_constant: classified.is_constant,
    }
}

impl Potential1D {
    pub(crate) fn build(
        domain: IntervalDomain,
        eval: EvalFn,
        d2: Option<EvalFn>,
        descriptor: Descriptor1D,
        declared: Option<Meta1D>,
    ) -> Result<Self> {
        let vals = midpoint_samples(&*eval, domain);
        for (j, v) in vals.iter().enumerate() {
            if !v.is_finite() {
                let h = domain.length() / CLASSIFY_CELLS as f64;
                return Err(SpectralError::UnboundedPotential {
                    x: vec![domain.a() + (j as f64 + 0.5) * h],
                });
            }
        }
        for x in [domain.a(), domain.b()] {
            if !eval(x).is_finite() {
                return Err(SpectralError::UnboundedPotential { x: vec![x] });
            }
        }
        let sup_abs = vals
            .iter()
            .map(|v| v.abs())
            .fold(eval(domain.a()).abs().max(eval(domain.b()).abs()), f64::max);
        let classified = classify_samples(&vals, sup_abs);
        let meta = match &declared {
            Some(d) => {
                check_declared(d, &classified)?;
                mask_unknown(d, classified)
            }
            None => classified,
        };
        Ok(Potential1D {
            eval,
            d2,
            descriptor,
            meta,
            domain,
            sup_abs,
        })
    }

    pub fn constant(domain: IntervalDomain, value: f64) -> Result<Self> {
        Self::build(
            domain,
            Arc::new(move |_| value),
            Some(Arc::new(|_| 0.0)),
            Descriptor1D::Named {
                name: "const".into(),
                params: vec![value],
            },
            None,
        )
    }

    /// Potential from an arbitrary closure. If `declared` is given, every
    /// non-`Unknown` flag is verified against a 1024-cell sample grid and a
    /// contradiction is a hard error.
    pub fn from_closure<F>(
        domain: IntervalDomain,
        eval: F,
        declared: Option<Meta1D>,
    ) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::build(domain, Arc::new(eval), None, Descriptor1D::Closure, declared)
    }

    /// As [`from_closure`](Self::from_closure) with an analytic second
    /// derivative attached (used by the perturbation formulas).
    pub fn from_closure_with_d2<F, G>(
        domain: IntervalDomain,
        eval: F,
        d2: G,
        declared: Option<Meta1D>,
    ) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::build(
            domain,
            Arc::new(eval),
            Some(Arc::new(d2)),
            Descriptor1D::Closure,
            declared,
        )
    }

    /// Left-continuous step function; breakpoints must be strictly
    /// increasing and interior to the domain.
    pub fn piecewise_constant(
        domain: IntervalDomain,
        breakpoints: Vec<f64>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if values.len() != breakpoints.len() + 1 {
            return Err(SpectralError::InvalidArgument(format!(
                "need {} values for {} breakpoints",
                breakpoints.len() + 1,
                breakpoints.len()
            )));
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(SpectralError::InvalidArgument(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if breakpoints.iter().any(|&b| !domain.contains(b)) {
            return Err(SpectralError::InvalidArgument(
                "breakpoints must lie inside the domain".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(SpectralError::UnboundedPotential { x: vec![] });
        }
        let bp = breakpoints.clone();
        let vs = values.clone();
        let eval: EvalFn = Arc::new(move |x| {
            let idx = bp.partition_point(|&b| b < x);
            vs[idx]
        });
        Self::build(
            domain,
            eval,
            None,
            Descriptor1D::PiecewiseConstant {
                breakpoints,
                values,
            },
            None,
        )
    }

    /// Piecewise-linear interpolation of samples; `xs` must be strictly
    /// increasing and span the domain.
    pub fn tabulated(domain: IntervalDomain, xs: Vec<f64>, vs: Vec<f64>) -> Result<Self> {
        if xs.len() != vs.len() || xs.len() < 2 {
            return Err(SpectralError::InvalidArgument(
                "tabulated data needs matching xs/vs with at least 2 samples".into(),
            ));
        }
        if !xs.windows(2).all(|w| w[0] < w[1]) {
            return Err(SpectralError::InvalidArgument(
                "tabulated xs must be strictly increasing".into(),
            ));
        }
        let slack = 1e-9 * domain.length();
        if xs[0] > domain.a() + slack || xs[xs.len() - 1] < domain.b() - slack {
            return Err(SpectralError::InvalidArgument(
                "tabulated samples must cover the domain".into(),
            ));
        }
        if vs.iter().any(|v| !v.is_finite()) {
            return Err(SpectralError::UnboundedPotential { x: vec![] });
        }
        let xs_c = xs.clone();
        let vs_c = vs.clone();
        let eval: EvalFn = Arc::new(move |x| {
            let x = x.clamp(xs_c[0], xs_c[xs_c.len() - 1]);
            let i = xs_c.partition_point(|&t| t < x).clamp(1, xs_c.len() - 1);
            let t = (x - xs_c[i - 1]) / (xs_c[i] - xs_c[i - 1]);
            vs_c[i - 1] + t * (vs_c[i] - vs_c[i - 1])
        });
        Self::build(domain, eval, None, Descriptor1D::Tabulated { xs, vs }, None)
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn eval_fn(&self) -> EvalFn {
        self.eval.clone()
    }

    pub fn domain(&self) -> IntervalDomain {
        self.domain
    }

    pub fn meta(&self) -> &Meta1D {
        &self.meta
    }

    pub fn descriptor(&self) -> &Descriptor1D {
        &self.descriptor
    }

    /// Sup of |V| over the sample grid and endpoints.
    pub fn sup_abs(&self) -> f64 {
        self.sup_abs
    }

    pub fn is_piecewise_constant(&self) -> bool {
        matches!(self.descriptor, Descriptor1D::PiecewiseConstant { .. })
    }

    /// Point sample for grid-based solvers. A grid node that coincides with
    /// a step breakpoint gets the mean of the one-sided limits: sampling the
    /// left-continuous value there biases the node quadrature by O(h) and
    /// breaks the order-2 error model the refinement driver relies on.
    pub fn node_sample(&self, x: f64, tol: f64) -> f64 {
        if let Descriptor1D::PiecewiseConstant {
            breakpoints,
            values,
        } = &self.descriptor
        {
            for (i, &b) in breakpoints.iter().enumerate() {
                if (x - b).abs() <= tol {
                    return 0.5 * (values[i] + values[i + 1]);
                }
            }
        }
        (self.eval)(x)
    }

    /// Second derivative: analytic when attached, otherwise a central
    /// finite difference for descriptors that can support one.
    pub fn second_derivative(&self, x: f64) -> Result<f64> {
        if let Some(d2) = &self.d2 {
            return Ok(d2(x));
        }
        match self.base_descriptor() {
            Descriptor1D::PiecewiseConstant { .. } | Descriptor1D::Tabulated { .. } => {
                Err(SpectralError::MissingSecondDerivative)
            }
            _ => {
                let h = 1e-4 * self.domain.length();
                let x0 = x
                    .max(self.domain.a() + h)
                    .min(self.domain.b() - h);
                Ok(((self.eval)(x0 + h) - 2.0 * (self.eval)(x0) + (self.eval)(x0 - h)) / (h * h))
            }
        }
    }

    fn base_descriptor(&self) -> &Descriptor1D {
        let mut d = &self.descriptor;
        while let Descriptor1D::Scaled { base, .. } = d {
            d = base;
        }
        d
    }

    /// Range spread max V - min V on a 1024-cell midpoint grid of `sub`
    /// (the non-constancy measure used by the verifiers).
    pub fn range_spread_on(&self, sub: IntervalDomain) -> f64 {
        let vals = midpoint_samples(&*self.eval, sub);
        vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - vals.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Fresh sampled classification on a subinterval.
    pub fn classify_on(&self, sub: IntervalDomain) -> Meta1D {
        let vals = midpoint_samples(&*self.eval, sub);
        classify_samples(&vals, self.sup_abs)
    }

    /// tau * V + offset with metadata propagated (convexity flips for
    /// tau < 0, symmetry is preserved, tau = 0 yields a constant).
    pub fn scale_shift(&self, tau: f64, offset: f64) -> Result<Potential1D> {
        let base = self.eval.clone();
        let eval: EvalFn = Arc::new(move |x| tau * base(x) + offset);
        let d2 = self.d2.as_ref().map(|d| {
            let d = d.clone();
            let f: EvalFn = Arc::new(move |x| tau * d(x));
            f
        });
        let descriptor = match &self.descriptor {
            Descriptor1D::PiecewiseConstant {
                breakpoints,
                values,
            } => Descriptor1D::PiecewiseConstant {
                breakpoints: breakpoints.clone(),
                values: values.iter().map(|v| tau * v + offset).collect(),
            },
            Descriptor1D::Tabulated { xs, vs } => Descriptor1D::Tabulated {
                xs: xs.clone(),
                vs: vs.iter().map(|v| tau * v + offset).collect(),
            },
            other => Descriptor1D::Scaled {
                base: Box::new(other.clone()),
                tau,
                offset,
            },
        };
        let scaled = Self::build(self.domain, eval, d2, descriptor, None)?;
        // keep flags the caller never knew unknown
        Ok(Potential1D {
            meta: mask_unknown(&self.meta, scaled.meta),
            ..scaled
        })
    }

    /// Restriction to a subinterval; metadata is re-classified relative to
    /// the new domain. Step descriptors stay step descriptors.
    pub fn restrict(&self, sub: IntervalDomain) -> Result<Potential1D> {
        if sub.a() < self.domain.a() - 1e-12 || sub.b() > self.domain.b() + 1e-12 {
            return Err(SpectralError::InvalidArgument(
                "restriction must be a subinterval".into(),
            ));
        }
        let descriptor = match self.base_descriptor() {
            Descriptor1D::PiecewiseConstant { breakpoints, .. } => {
                let bps: Vec<f64> = breakpoints
                    .iter()
                    .cloned()
                    .filter(|&b| sub.contains(b))
                    .collect();
                let mut edges = vec![sub.a()];
                edges.extend(bps.iter().cloned());
                edges.push(sub.b());
                let values = edges
                    .windows(2)
                    .map(|w| (self.eval)(0.5 * (w[0] + w[1])))
                    .collect();
                Descriptor1D::PiecewiseConstant {
                    breakpoints: bps,
                    values,
                }
            }
            _ => Descriptor1D::Closure,
        };
        let base = self.eval.clone();
        let eval: EvalFn = Arc::new(move |x| base(x));
        Self::build(sub, eval, self.d2.clone(), descriptor, None)
    }

    /// Even reflection of a potential on (0, L) to (-L, L).
    pub fn reflect_even(&self) -> Result<Potential1D> {
        if self.domain.a().abs() > 1e-14 {
            return Err(SpectralError::InvalidArgument(
                "even reflection needs a domain starting at 0".into(),
            ));
        }
        let l = self.domain.b();
        let full = IntervalDomain::new(-l, l)?;
        let descriptor = match self.base_descriptor() {
            Descriptor1D::PiecewiseConstant {
                breakpoints,
                values,
            } => {
                let mut bps: Vec<f64> = breakpoints.iter().map(|b| -b).rev().collect();
                bps.extend(breakpoints.iter().cloned());
                let mut vals: Vec<f64> = values.iter().skip(1).rev().cloned().collect();
                vals.extend(values.iter().cloned());
                Descriptor1D::PiecewiseConstant {
                    breakpoints: bps,
                    values: vals,
                }
            }
            _ => Descriptor1D::Closure,
        };
        if let Descriptor1D::PiecewiseConstant {
            breakpoints,
            values,
        } = &descriptor
        {
            let bp = breakpoints.clone();
            let vs = values.clone();
            let eval: EvalFn = Arc::new(move |x| {
                let idx = bp.partition_point(|&b| b < x);
                vs[idx]
            });
            return Self::build(full, eval, None, descriptor, None);
        }
        let base = self.eval.clone();
        let eval: EvalFn = Arc::new(move |x| base(x.abs()));
        Self::build(full, eval, None, descriptor, None)
    }
}
