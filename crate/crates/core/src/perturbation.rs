//! Eigenvalue perturbation machinery along the family tau -> tau V: exact
//! derivatives d lambda_k / d tau = integral of V psi_k^2 for a simple
//! eigenvalue with normalized eigenfunction psi_k, the initial slope of
//! the gap lambda_k - mu_{k+1} at tau = 0, and tracing of the gap curves
//! with sign-change localization.

use crate::domain::{BoundaryPair, IntervalDomain, Potential1D};
use crate::eig1d;
use crate::error::{Result, SpectralError};
use crate::quad::simpson;

/// Relative gap under which an eigenvalue counts as degenerate and the
/// derivative formula is refused.
pub const SIMPLE_GAP_TOL: f64 = 1e-6;

fn hf_integral_at(
    v: &Potential1D,
    tau_v: &Potential1D,
    dom: IntervalDomain,
    bc: BoundaryPair,
    k: usize,
    n: usize,
) -> Result<f64> {
    let sys = eig1d::assemble(tau_v, dom, bc, n)?;
    let evs = eig1d::lowest_eigenvalues(&sys, k + 1)?;
    let scale = evs.nth(k).abs().max(1.0);
    let gap_up = evs.nth(k + 1) - evs.nth(k);
    let gap_down = if k >= 2 {
        evs.nth(k) - evs.nth(k - 1)
    } else {
        f64::INFINITY
    };
    let gap = gap_up.min(gap_down);
    if gap <= SIMPLE_GAP_TOL * scale {
        return Err(SpectralError::NearDegenerate { k, gap });
    }
    let pair = eig1d::eigenfunction(&sys, evs.nth(k))?;
    let jump_tol = 1e-9 * dom.length();
    Ok(pair
        .grid
        .iter()
        .zip(&pair.values)
        .zip(sys.node_weights())
        .map(|((x, u), w)| w * v.node_sample(*x, jump_tol) * u * u)
        .sum())
}

/// d/d tau of the k-th eigenvalue of -u'' + tau V u under `bc`, evaluated
/// by weighted quadrature of V against the squared normalized discrete
/// eigenfunction and Richardson-extrapolated over two grids. Refuses
/// near-degenerate eigenvalues: the formula presumes a differentiable
/// branch.
pub fn hf_derivative(
    v: &Potential1D,
    dom: IntervalDomain,
    bc: BoundaryPair,
    k: usize,
    tau: f64,
) -> Result<f64> {
    if k == 0 {
        return Err(SpectralError::InvalidArgument("k is 1-based".into()));
    }
    let tau_v = v.scale_shift(tau, 0.0)?;
    let n = if v.is_piecewise_constant() { 4096 } else { 2048 };
    let coarse = hf_integral_at(v, &tau_v, dom, bc, k, n)?;
    let fine = hf_integral_at(v, &tau_v, dom, bc, k, 2 * n)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// The two integration-by-parts forms of the initial gap slope
/// d/d tau (lambda_k - mu_{k+1})(tau V) at tau = 0, both mapped to the
/// reference interval (0, pi) by the affine substitution x = a + s t.
#[derive(Debug, Clone, Copy)]
pub struct Prop31Slope {
    /// -(2/pi) integral of s^2 V''(x(t)) sin^2(kt) / (2k^2) dt
    pub from_second_derivative: f64,
    /// (2/pi) integral of V(x(t)) (sin^2(kt) - cos^2(kt)) dt
    pub from_potential_form: f64,
}

impl Prop31Slope {
    pub fn slope(&self) -> f64 {
        self.from_second_derivative
    }
}

const SLOPE_PANELS: usize = 4096;

/// Initial slope of the k-th gap for an eigenvalue family starting at the
/// free operator. Needs second-derivative data (analytic, or finite
/// differences of a smooth descriptor); the two algebraically equivalent
/// forms are evaluated independently and must agree to 1e-8.
pub fn prop31_initial_slope(v: &Potential1D, k: usize) -> Result<Prop31Slope> {
    if k == 0 {
        return Err(SpectralError::InvalidArgument("k is 1-based".into()));
    }
    let dom = v.domain();
    let s = dom.length() / std::f64::consts::PI;
    log::debug!(
        "gap-slope rescale: ({}, {}) -> (0, pi), x = {} + {s} t",
        dom.a(),
        dom.b(),
        dom.a()
    );
    let kf = k as f64;
    // probe second-derivative availability before integrating
    v.second_derivative(dom.midpoint())?;
    let second = -(2.0 / std::f64::consts::PI)
        * simpson(
            |t| {
                let x = dom.a() + s * t;
                let d2 = s * s * v.second_derivative(x).expect("checked above");
                d2 * (kf * t).sin().powi(2) / (2.0 * kf * kf)
            },
            0.0,
            std::f64::consts::PI,
            SLOPE_PANELS,
        );
    let first = (2.0 / std::f64::consts::PI)
        * simpson(
            |t| {
                let x = dom.a() + s * t;
                let st = (kf * t).sin();
                let ct = (kf * t).cos();
                v.eval(x) * (st * st - ct * ct)
            },
            0.0,
            std::f64::consts::PI,
            SLOPE_PANELS,
        );
    let tol = 1e-8 * (1.0 + v.sup_abs() + second.abs());
    if (second - first).abs() > tol {
        return Err(SpectralError::Other(format!(
            "integration-by-parts forms of the gap slope disagree: \
             {second:.3e} vs {first:.3e} (tolerance {tol:.1e})"
        )));
    }
    Ok(Prop31Slope {
        from_second_derivative: second,
        from_potential_form: first,
    })
}

/// One tau node of a gap-flow curve.
#[derive(Debug, Clone)]
pub struct FlowRecord {
    pub tau: f64,
    /// mu_1 .. mu_{K+1}
    pub mu: Vec<f64>,
    /// lambda_1 .. lambda_K
    pub lambda: Vec<f64>,
    /// g_k = lambda_k - mu_{k+1}, k = 1..K
    pub gap: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct Crossing {
    /// 1-based gap index.
    pub k: usize,
    pub tau_star: f64,
    pub bracket: (f64, f64),
}

/// Gap curves tau -> g_k(tau V) on a tau grid, with refined sign-change
/// locations.
#[derive(Debug, Clone)]
pub struct FlowCurve {
    pub tau_grid: Vec<f64>,
    pub records: Vec<FlowRecord>,
    pub crossings: Vec<Crossing>,
    /// Set when a node solve failed and the curve stops early.
    pub truncated: bool,
}

const FLOW_SOLVE_TOL: f64 = 1e-8;
const CROSSING_TOL: f64 = 1e-6;

fn gaps_at(
    v: &Potential1D,
    dom: IntervalDomain,
    k: usize,
    tau: f64,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let tv = v.scale_shift(tau, 0.0)?;
    let mu = eig1d::solve(&tv, dom, BoundaryPair::NN, k + 1, FLOW_SOLVE_TOL)?;
    let lam = eig1d::solve(&tv, dom, BoundaryPair::DD, k, FLOW_SOLVE_TOL)?;
    let gaps = (1..=k).map(|j| lam.nth(j) - mu.nth(j + 1)).collect();
    Ok((mu.eigenvalues, lam.eigenvalues, gaps))
}

/// Trace the Neumann/Dirichlet gap flow over `n_steps` tau nodes spanning
/// `[tau_min, tau_max]` and localize every sign change of every gap by
/// bisection to 1e-6 in tau. A node failure truncates the curve and sets
/// a flag instead of erroring.
pub fn trace_flow(
    v: &Potential1D,
    dom: IntervalDomain,
    k: usize,
    tau_min: f64,
    tau_max: f64,
    n_steps: usize,
) -> Result<FlowCurve> {
    if n_steps < 8 {
        return Err(SpectralError::InvalidArgument(format!(
            "need at least 8 flow steps, got {n_steps}"
        )));
    }
    if !(tau_min < tau_max) {
        return Err(SpectralError::InvalidArgument("empty tau range".into()));
    }
    let mut tau_grid = Vec::with_capacity(n_steps);
    let mut records = Vec::with_capacity(n_steps);
    let mut truncated = false;
    for i in 0..n_steps {
        let tau = tau_min + (tau_max - tau_min) * i as f64 / (n_steps - 1) as f64;
        match gaps_at(v, dom, k, tau) {
            Ok((mu, lambda, gap)) => {
                tau_grid.push(tau);
                records.push(FlowRecord {
                    tau,
                    mu,
                    lambda,
                    gap,
                });
            }
            Err(e) => {
                log::warn!("flow node tau={tau} failed ({e}); curve truncated");
                truncated = true;
                break;
            }
        }
    }
    let mut crossings = Vec::new();
    for gap_idx in 1..=k {
        for w in records.windows(2) {
            let (g0, g1) = (w[0].gap[gap_idx - 1], w[1].gap[gap_idx - 1]);
            if g0 * g1 < 0.0 {
                let (mut a, mut b) = (w[0].tau, w[1].tau);
                let mut ga = g0;
                while b - a > CROSSING_TOL {
                    let mid = 0.5 * (a + b);
                    let gm = gaps_at(v, dom, k, mid)?.2[gap_idx - 1];
                    if gm == 0.0 || ga * gm < 0.0 {
                        b = mid;
                    } else {
                        a = mid;
                        ga = gm;
                    }
                }
                crossings.push(Crossing {
                    k: gap_idx,
                    tau_star: 0.5 * (a + b),
                    bracket: (a, b),
                });
            }
        }
    }
    Ok(FlowCurve {
        tau_grid,
        records,
        crossings,
        truncated,
    })
}
