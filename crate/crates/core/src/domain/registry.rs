use std::sync::Arc;

use super::interval::IntervalDomain;
use super::polygon::ConvexPolygonDomain;
use super::potential1d::{Descriptor1D, Potential1D};
use super::potential2d::{Meta2D, Potential2D};
use crate::error::{Result, SpectralError};

#[derive(Debug, Clone)]
pub enum DomainSpec {
    Interval(IntervalDomain),
    Polygon(ConvexPolygonDomain),
}

#[derive(Debug, Clone)]
pub enum AnyPotential {
    OneD(Potential1D),
    TwoD(Potential2D),
}

impl AnyPotential {
    pub fn as_1d(&self) -> Option<&Potential1D> {
        match self {
            AnyPotential::OneD(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_2d(&self) -> Option<&Potential2D> {
        match self {
            AnyPotential::TwoD(p) => Some(p),
            _ => None,
        }
    }
}

/// Builtin registry: name, 1D/2D availability, parameter arity.
pub fn builtin_names() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("const", "1d+2d", "v"),
        ("step", "1d", "c > 0 (height on the left half, 0 on the right)"),
        ("poly", "1d", "c0 c1 ... (coefficients, lowest degree first)"),
        ("exp", "1d: a e^(b x); 2d: a e^(b (x+y))", "a b"),
        ("gauss_rising", "1d", "a: a (x^2 e^(-x^2) - e^(-1))"),
        ("gauss_falling", "1d", "a: -a x^2 e^(-x^2)"),
        ("radial_concave", "2d", "c > 0: -c e^(x^2+y^2)"),
        ("quad_radial", "2d", "c: c (x^2 + y^2)"),
        ("sin_x", "2d", "a: a sin(x), independent of y"),
    ]
}

fn arity(name: &str, params: &[f64], expected: usize) -> Result<()> {
    if params.len() != expected {
        return Err(SpectralError::WrongArity {
            name: name.into(),
            expected: expected.to_string(),
            got: params.len(),
        });
    }
    Ok(())
}

fn named(name: &str, params: &[f64]) -> Descriptor1D {
    Descriptor1D::Named {
        name: name.into(),
        params: params.to_vec(),
    }
}

fn make_1d(name: &str, params: &[f64], dom: IntervalDomain) -> Result<Potential1D> {
    match name {
        "const" => {
            arity(name, params, 1)?;
            Potential1D::constant(dom, params[0])
        }
        "step" => {
            arity(name, params, 1)?;
            let c = params[0];
            if !(c > 0.0) {
                return Err(SpectralError::InvalidArgument(format!(
                    "step height must be positive, got {c}"
                )));
            }
            Potential1D::piecewise_constant(dom, vec![dom.midpoint()], vec![c, 0.0])
        }
        "poly" => {
            if params.is_empty() {
                return Err(SpectralError::WrongArity {
                    name: name.into(),
                    expected: ">= 1".into(),
                    got: 0,
                });
            }
            let coeffs = params.to_vec();
            let c2 = coeffs.clone();
            let horner =
                |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci);
            let d2coeffs: Vec<f64> = coeffs
                .iter()
                .enumerate()
                .skip(2)
                .map(|(i, &ci)| (i * (i - 1)) as f64 * ci)
                .collect();
            Potential1D::build(
                dom,
                Arc::new(move |x| horner(&coeffs, x)),
                Some(Arc::new(move |x| {
                    d2coeffs.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
                })),
                named(name, &c2),
                None,
            )
        }
        "exp" => {
            arity(name, params, 2)?;
            let (a, b) = (params[0], params[1]);
            Potential1D::build(
                dom,
                Arc::new(move |x| a * (b * x).exp()),
                Some(Arc::new(move |x| a * b * b * (b * x).exp())),
                named(name, params),
                None,
            )
        }
        "gauss_rising" => {
            arity(name, params, 1)?;
            let a = params[0];
            Potential1D::build(
                dom,
                Arc::new(move |x| a * (x * x * (-x * x).exp() - (-1.0f64).exp())),
                Some(Arc::new(move |x| {
                    let x2 = x * x;
                    a * (-x2).exp() * (2.0 - 10.0 * x2 + 4.0 * x2 * x2)
                })),
                named(name, params),
                None,
            )
        }
        "gauss_falling" => {
            arity(name, params, 1)?;
            let a = params[0];
            Potential1D::build(
                dom,
                Arc::new(move |x| -a * x * x * (-x * x).exp()),
                Some(Arc::new(move |x| {
                    let x2 = x * x;
                    -a * (-x2).exp() * (2.0 - 10.0 * x2 + 4.0 * x2 * x2)
                })),
                named(name, params),
                None,
            )
        }
        other => Err(SpectralError::UnknownPotential(other.into())),
    }
}

fn make_2d(name: &str, params: &[f64], dom: ConvexPolygonDomain) -> Result<Potential2D> {
    match name {
        "const" => {
            arity(name, params, 1)?;
            Potential2D::constant(dom, params[0])
        }
        "exp" => {
            arity(name, params, 2)?;
            let (a, b) = (params[0], params[1]);
            let grad_orth = if a != 0.0 && b != 0.0 {
                Some([1.0, -1.0]) // normalized by the constructor
            } else {
                None
            };
            Potential2D::new(
                dom,
                "exp",
                Arc::new(move |x, y| a * (b * (x + y)).exp()),
                Some(Arc::new(move |x, y| {
                    let e = a * b * (b * (x + y)).exp();
                    [e, e]
                })),
                Some(Arc::new(move |x, y| {
                    let e = a * b * b * (b * (x + y)).exp();
                    [[e, e], [e, e]]
                })),
                Meta2D {
                    gradient_orthogonal_subspace: grad_orth,
                    axis_symmetric: (b == 0.0, b == 0.0),
                    concave: a <= 0.0,
                    is_constant: a == 0.0 || b == 0.0,
                },
            )
        }
        "radial_concave" => {
            arity(name, params, 1)?;
            let c = params[0];
            if !(c > 0.0) {
                return Err(SpectralError::InvalidArgument(format!(
                    "radial_concave needs c > 0, got {c}"
                )));
            }
            Potential2D::new(
                dom,
                "radial_concave",
                Arc::new(move |x, y| -c * (x * x + y * y).exp()),
                Some(Arc::new(move |x, y| {
                    let e = c * (x * x + y * y).exp();
                    [-2.0 * x * e, -2.0 * y * e]
                })),
                Some(Arc::new(move |x, y| {
                    let e = c * (x * x + y * y).exp();
                    [
                        [-e * (2.0 + 4.0 * x * x), -e * 4.0 * x * y],
                        [-e * 4.0 * x * y, -e * (2.0 + 4.0 * y * y)],
                    ]
                })),
                Meta2D {
                    gradient_orthogonal_subspace: None,
                    axis_symmetric: (true, true),
                    concave: true,
                    is_constant: false,
                },
            )
        }
        "quad_radial" => {
            arity(name, params, 1)?;
            let c = params[0];
            Potential2D::new(
                dom,
                "quad_radial",
                Arc::new(move |x, y| c * (x * x + y * y)),
                Some(Arc::new(move |x, y| [2.0 * c * x, 2.0 * c * y])),
                Some(Arc::new(move |_, _| [[2.0 * c, 0.0], [0.0, 2.0 * c]])),
                Meta2D {
                    gradient_orthogonal_subspace: None,
                    axis_symmetric: (true, true),
                    concave: c <= 0.0,
                    is_constant: c == 0.0,
                },
            )
        }
        "sin_x" => {
            arity(name, params, 1)?;
            let a = params[0];
            Potential2D::new(
                dom,
                "sin_x",
                Arc::new(move |x, _| a * x.sin()),
                Some(Arc::new(move |x, _| [a * x.cos(), 0.0])),
                Some(Arc::new(move |x, _| [[-a * x.sin(), 0.0], [0.0, 0.0]])),
                Meta2D {
                    gradient_orthogonal_subspace: if a != 0.0 { Some([0.0, 1.0]) } else { None },
                    axis_symmetric: (false, true),
                    concave: a == 0.0,
                    is_constant: a == 0.0,
                },
            )
        }
        other => Err(SpectralError::UnknownPotential(other.into())),
    }
}

/// Build a builtin potential on the given domain; parameter arity and
/// boundedness are checked, and metadata flags come pre-filled.
pub fn make_named_potential(
    name: &str,
    params: &[f64],
    domain: &DomainSpec,
) -> Result<AnyPotential> {
    match domain {
        DomainSpec::Interval(d) => make_1d(name, params, *d).map(AnyPotential::OneD),
        DomainSpec::Polygon(p) => make_2d(name, params, p.clone()).map(AnyPotential::TwoD),
    }
}

/// tau * V + offset for either dimension.
pub fn scale_shift_potential(v: &AnyPotential, tau: f64, offset: f64) -> Result<AnyPotential> {
    match v {
        AnyPotential::OneD(p) => p.scale_shift(tau, offset).map(AnyPotential::OneD),
        AnyPotential::TwoD(p) => p.scale_shift(tau, offset).map(AnyPotential::TwoD),
    }
}
