//! JSON run configurations. Unknown keys are rejected, numeric knobs are
//! validated against the solver-documented bounds before anything runs.

use serde::Deserialize;
use spectral_core::domain::{
    make_named_potential, AnyPotential, ConvexPolygonDomain, DomainSpec, IntervalDomain,
    Potential1D, Potential2D,
};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, tag = "kind", rename_all = "lowercase")]
pub enum DomainConfig {
    Interval { a: f64, b: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

impl DomainConfig {
    pub fn build(&self) -> Result<DomainSpec, CliError> {
        match self {
            DomainConfig::Interval { a, b } => IntervalDomain::new(*a, *b)
                .map(DomainSpec::Interval)
                .map_err(|e| CliError::Config(e.to_string())),
            DomainConfig::Polygon { vertices } => ConvexPolygonDomain::new(vertices.clone())
                .map(DomainSpec::Polygon)
                .map_err(|e| CliError::Config(e.to_string())),
        }
    }

    pub fn interval(&self) -> Result<IntervalDomain, CliError> {
        match self.build()? {
            DomainSpec::Interval(d) => Ok(d),
            _ => Err(CliError::Config("this command needs an interval domain".into())),
        }
    }

    pub fn polygon(&self) -> Result<ConvexPolygonDomain, CliError> {
        match self.build()? {
            DomainSpec::Polygon(p) => Ok(p),
            _ => Err(CliError::Config("this command needs a polygon domain".into())),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TabulatedData {
    pub x: Vec<f64>,
    pub v: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiecewiseConstantData {
    pub breakpoints: Vec<f64>,
    pub values: Vec<f64>,
}

/// One of: a named builtin with parameters, tabulated samples with
/// piecewise-linear interpolation, or a step function.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialConfig {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub params: Option<Vec<f64>>,
    #[serde(default)]
    pub tabulated: Option<TabulatedData>,
    #[serde(default)]
    pub piecewise_constant: Option<PiecewiseConstantData>,
}

impl PotentialConfig {
    pub fn build(&self, domain: &DomainSpec) -> Result<AnyPotential, CliError> {
        let variants = self.name.is_some() as u8
            + self.tabulated.is_some() as u8
            + self.piecewise_constant.is_some() as u8;
        if variants != 1 {
            return Err(CliError::Config(
                "potential must specify exactly one of name/tabulated/piecewise_constant".into(),
            ));
        }
        if let Some(name) = &self.name {
            let params = self.params.clone().unwrap_or_default();
            return make_named_potential(name, &params, domain)
                .map_err(|e| CliError::Config(e.to_string()));
        }
        if self.params.is_some() {
            return Err(CliError::Config(
                "params only apply to named potentials".into(),
            ));
        }
        let interval = match domain {
            DomainSpec::Interval(d) => *d,
            DomainSpec::Polygon(_) => {
                return Err(CliError::Config(
                    "tabulated/step potentials are one-dimensional".into(),
                ))
            }
        };
        if let Some(t) = &self.tabulated {
            return Potential1D::tabulated(interval, t.x.clone(), t.v.clone())
                .map(AnyPotential::OneD)
                .map_err(|e| CliError::Config(e.to_string()));
        }
        let pc = self.piecewise_constant.as_ref().expect("checked above");
        Potential1D::piecewise_constant(interval, pc.breakpoints.clone(), pc.values.clone())
            .map(AnyPotential::OneD)
            .map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn build_1d(&self, domain: IntervalDomain) -> Result<Potential1D, CliError> {
        match self.build(&DomainSpec::Interval(domain))? {
            AnyPotential::OneD(p) => Ok(p),
            _ => unreachable!("interval domain produces a 1D potential"),
        }
    }

    pub fn build_2d(&self, domain: &ConvexPolygonDomain) -> Result<Potential2D, CliError> {
        match self.build(&DomainSpec::Polygon(domain.clone()))? {
            AnyPotential::TwoD(p) => Ok(p),
            _ => unreachable!("polygon domain produces a 2D potential"),
        }
    }
}

fn default_k() -> usize {
    4
}

fn default_tol() -> f64 {
    1e-8
}

fn default_mesh_level() -> u32 {
    4
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum1dConfig {
    pub domain: DomainConfig,
    pub potential: PotentialConfig,
    pub bc: String,
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum2dConfig {
    pub domain: DomainConfig,
    pub potential: PotentialConfig,
    pub bc: String,
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default = "default_mesh_level")]
    pub mesh_level: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verify1dConfig {
    pub domain: DomainConfig,
    pub potentials: Vec<PotentialConfig>,
    /// Subset of {"L3.2", "T3.3", "R3.5"}; all three when omitted.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verify2dConfig {
    pub domain: DomainConfig,
    pub potential: PotentialConfig,
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default = "default_mesh_level")]
    pub mesh_level: u32,
    /// Attempt the axis-symmetric strengthening.
    #[serde(default)]
    pub symmetric: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowConfig {
    pub domain: DomainConfig,
    pub potential: PotentialConfig,
    #[serde(default = "default_k")]
    pub k: usize,
    pub tau_min: f64,
    pub tau_max: f64,
    pub steps: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientConfig {
    pub domain: DomainConfig,
    pub potential: PotentialConfig,
    #[serde(default)]
    pub tau: Option<f64>,
}

pub fn load<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("malformed config: {e}")))
}

pub fn validate_k(k: usize) -> Result<usize, CliError> {
    if (1..=64).contains(&k) {
        Ok(k)
    } else {
        Err(CliError::Config(format!("k = {k} outside 1..=64")))
    }
}

pub fn validate_tol(tol: f64) -> Result<f64, CliError> {
    if (1e-10..=1e-2).contains(&tol) {
        Ok(tol)
    } else {
        Err(CliError::Config(format!(
            "tolerance {tol:e} outside [1e-10, 1e-2]"
        )))
    }
}

pub fn validate_level(level: u32) -> Result<u32, CliError> {
    if (1..=8).contains(&level) {
        Ok(level)
    } else {
        Err(CliError::Config(format!("mesh level {level} outside 1..=8")))
    }
}
