//! Composite quadrature helpers.

/// Composite Simpson rule with `panels` sub-intervals (forced even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let m = if panels % 2 == 0 { panels } else { panels + 1 };
    let h = (b - a) / m as f64;
    let mut acc = f(a) + f(b);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomials_and_trig() {
        assert_abs_diff_eq!(simpson(|x| x * x, 0.0, 1.0, 64), 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(simpson(|x| x.sin(), 0.0, PI, 2048), 2.0, epsilon = 1e-12);
    }
}
