use thiserror::Error;

pub type Result<T> = std::result::Result<T, SpectralError>;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("unknown potential `{0}`")]
    UnknownPotential(String),

    #[error("potential `{name}` expects {expected} parameter(s), got {got}")]
    WrongArity {
        name: String,
        expected: String,
        got: usize,
    },

    #[error("potential evaluates to a non-finite value at {x:?}")]
    UnboundedPotential { x: Vec<f64> },

    #[error("declared metadata inconsistent with samples: {0}")]
    MetaInconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigenvalue bisection did not converge within {iterations} iterations")]
    BisectionStalled { iterations: usize },

    #[error("inverse iteration failed: relative residual {residual:.3e}")]
    EigenvectorResidual { residual: f64 },

    #[error(
        "grid refinement did not reach tolerance {target:.3e} at n = {n_max} \
         (best remaining change {achieved:.3e})"
    )]
    NoConvergence {
        target: f64,
        achieved: f64,
        n_max: usize,
        best: Vec<f64>,
    },

    #[error("eigenvalue {k} is within {gap:.3e} of a neighbor; derivative of a crossing branch refused")]
    NearDegenerate { k: usize, gap: f64 },

    #[error("second-derivative data unavailable for this potential")]
    MissingSecondDerivative,

    #[error("found only {found} roots below the scan ceiling, {requested} requested")]
    TooFewRoots { found: usize, requested: usize },

    #[error("problem dimension {dim} exceeds the dense-solver cap {cap} (set SPECTRAL_GAP_NMAX to raise)")]
    DimensionCap { dim: usize, cap: usize },

    #[error("mass matrix is not numerically positive definite (pivot {pivot:.3e} at row {row})")]
    MassNotPositiveDefinite { row: usize, pivot: f64 },

    #[error("{0}")]
    Other(String),
}
