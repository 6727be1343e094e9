use super::bc::{BoundaryKind2D, BoundaryPair};

/// Which eigenvalue problem a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcSelector {
    OneD(BoundaryPair),
    TwoD(BoundaryKind2D),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Discretization {
    /// Uniform 1D grid with `n` sub-intervals; `richardson` marks values
    /// extrapolated from the (n/2, n) pair.
    Grid { n: usize, richardson: bool },
    /// Triangle mesh at the given refinement level with `nodes` degrees of
    /// freedom (after boundary elimination).
    Mesh { level: u32, nodes: usize },
    /// Closed-form / secular-equation values.
    Analytic,
}

/// Sorted eigenvalues with per-eigenvalue error estimates.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub count_requested: usize,
    pub bc: BcSelector,
    pub discretization: Discretization,
    pub error_estimate: Vec<f64>,
    /// Lowest eigenvalue should be simple; a near-degenerate pair at the
    /// bottom is flagged here, never rejected (discrete solvers can produce
    /// almost-coincident pairs before convergence).
    pub lowest_near_degenerate: bool,
}

impl SpectrumResult {
    pub fn new(
        eigenvalues: Vec<f64>,
        count_requested: usize,
        bc: BcSelector,
        discretization: Discretization,
        error_estimate: Vec<f64>,
    ) -> Self {
        debug_assert_eq!(eigenvalues.len(), count_requested);
        debug_assert_eq!(error_estimate.len(), eigenvalues.len());
        debug_assert!(eigenvalues.windows(2).all(|w| w[0] <= w[1] + 1e-12));
        let lowest_near_degenerate = eigenvalues.len() >= 2 && {
            let scale = eigenvalues[0].abs().max(eigenvalues[1].abs()).max(1.0);
            (eigenvalues[1] - eigenvalues[0]).abs() <= 1e-8 * scale
        };
        SpectrumResult {
            eigenvalues,
            count_requested,
            bc,
            discretization,
            error_estimate,
            lowest_near_degenerate,
        }
    }

    /// 1-based access matching the usual eigenvalue numbering.
    pub fn nth(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.eigenvalues.len(), "k out of range");
        self.eigenvalues[k - 1]
    }

    pub fn nth_error(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.error_estimate.len(), "k out of range");
        self.error_estimate[k - 1]
    }
}

/// An eigenvalue together with its grid eigenfunction values, normalized to
/// unit L2 norm under the discrete quadrature weights.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub eigenvalue: f64,
    /// Node coordinates the function values live on.
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    /// Discrete L2 norm after normalization (1 within 1e-10).
    pub norm: f64,
}
