use crate::error::{Result, SpectralError};

/// Bounded open interval (a, b).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalDomain {
    a: f64,
    b: f64,
}

impl IntervalDomain {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(SpectralError::InvalidDomain(format!(
                "endpoints must be finite, got ({a}, {b})"
            )));
        }
        if a >= b {
            return Err(SpectralError::InvalidDomain(format!(
                "need a < b, got ({a}, {b})"
            )));
        }
        Ok(IntervalDomain { a, b })
    }

    /// Symmetric interval (-r, r).
    pub fn symmetric(r: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(SpectralError::InvalidDomain(format!(
                "need r > 0, got {r}"
            )));
        }
        Self::new(-r, r)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    pub fn is_symmetric_about_origin(&self) -> bool {
        (self.a + self.b).abs() <= 1e-14 * self.length()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a < x && x < self.b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate() {
        assert!(IntervalDomain::new(1.0, 1.0).is_err());
        assert!(IntervalDomain::new(2.0, 1.0).is_err());
        assert!(IntervalDomain::new(f64::NEG_INFINITY, 0.0).is_err());
        assert!(IntervalDomain::symmetric(-1.0).is_err());
    }

    #[test]
    fn symmetric_constructor() {
        let d = IntervalDomain::symmetric(2.0).unwrap();
        assert_eq!((d.a(), d.b()), (-2.0, 2.0));
        assert!(d.is_symmetric_about_origin());
        assert_eq!(d.length(), 4.0);
    }
}
