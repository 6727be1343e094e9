//! Shooting method for -u'' + V u = lambda u on an interval via the Pruefer
//! phase. With u = rho sin(theta), u' = rho cos(theta) the phase satisfies
//! theta' = cos^2(theta) + (lambda - V(x)) sin^2(theta);
//! theta(b; lambda) is strictly increasing in lambda, and the boundary
//! conditions pin theta at both ends, so each eigenvalue is found by
//! bisection on lambda.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bc {
    Dirichlet,
    Neumann,
}

fn phase_rate(theta: f64, lambda: f64, v: f64) -> f64 {
    let s = theta.sin();
    let c = theta.cos();
    c * c + (lambda - v) * s * s
}

/// Integrate the phase from `a` to `b` with classical RK4 on `steps` uniform
/// sub-intervals and return theta(b).
fn integrate_phase<F: Fn(f64) -> f64>(
    v: &F,
    a: f64,
    b: f64,
    theta0: f64,
    lambda: f64,
    steps: usize,
) -> f64 {
    let h = (b - a) / steps as f64;
    let mut theta = theta0;
    let mut x = a;
    for _ in 0..steps {
        let v0 = v(x);
        let vh = v(x + 0.5 * h);
        let v1 = v(x + h);
        let k1 = phase_rate(theta, lambda, v0);
        let k2 = phase_rate(theta + 0.5 * h * k1, lambda, vh);
        let k3 = phase_rate(theta + 0.5 * h * k2, lambda, vh);
        let k4 = phase_rate(theta + h * k3, lambda, v1);
        theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x += h;
    }
    theta
}

/// k-th eigenvalue (k >= 1) of -u'' + V u on (a, b) with the given endpoint
/// conditions. `v_bound` must dominate |V| on the interval.
pub fn shoot_eigenvalue<F: Fn(f64) -> f64>(
    v: &F,
    a: f64,
    b: f64,
    left: Bc,
    right: Bc,
    k: usize,
    v_bound: f64,
    steps: usize,
) -> f64 {
    assert!(k >= 1 && b > a);
    let theta0 = match left {
        Bc::Dirichlet => 0.0,
        Bc::Neumann => std::f64::consts::FRAC_PI_2,
    };
    let target = match right {
        Bc::Dirichlet => k as f64 * std::f64::consts::PI,
        Bc::Neumann => (k as f64 - 0.5) * std::f64::consts::PI,
    };

    let mut lo = -v_bound - 1.0;
    let len = b - a;
    let mut hi = v_bound + ((k + 1) as f64 * std::f64::consts::PI / len).powi(2) + 10.0;
    // make sure the bracket really straddles the target phase
    while integrate_phase(v, a, b, theta0, hi, steps) < target {
        hi = 2.0 * hi + 10.0;
    }
    while integrate_phase(v, a, b, theta0, lo, steps) > target {
        lo = 2.0 * lo - 10.0;
    }
    for _ in 0..90 {
        let mid = 0.5 * (lo + hi);
        if integrate_phase(v, a, b, theta0, mid, steps) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}
