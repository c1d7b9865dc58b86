//! Adjacency spectra: Perron eigenpairs, full spectra of small graphs and
//! Cauchy interlacing checks.

mod jacobi;
mod power;

pub use jacobi::{jacobi_eigen, SymmetricEigen, SymmetricMatrix};
pub use power::{perron, perron_from, residual, PerronResult};

use crate::graph::{Graph, GraphError};
use crate::tolerance::Tolerances;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no edges; the Perron eigenpair is degenerate")]
    Degenerate,
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        lambda: f64,
        vector: Vec<f64>,
    },
    #[error("Jacobi sweeps did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    JacobiNoConvergence { sweeps: usize, off_norm: f64 },
    #[error("{n} vertices exceeds the dense eigensolver bound {max}; use perron for the spectral radius only")]
    TooLarge { n: usize, max: usize },
    #[error("start vector has length {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("invalid vertex subset: {0}")]
    Subset(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// All adjacency eigenvalues, descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
}

impl SpectrumResult {
    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    pub fn power_sum(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k)).sum()
    }
}

/// Dense adjacency matrix of `g`.
pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut a = SymmetricMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    a
}

/// Eigenvalues and eigenvectors of the adjacency matrix by Jacobi rotations.
pub fn full_eigen(g: &Graph, tol: &Tolerances) -> Result<SymmetricEigen, SpectralError> {
    if g.n() > tol.dense_max_n {
        return Err(SpectralError::TooLarge {
            n: g.n(),
            max: tol.dense_max_n,
        });
    }
    jacobi_eigen(&adjacency_matrix(g), tol.jacobi_tol, tol.jacobi_max_sweeps)
}

pub fn full_spectrum(g: &Graph, tol: &Tolerances) -> Result<SpectrumResult, SpectralError> {
    Ok(SpectrumResult {
        eigenvalues: full_eigen(g, tol)?.values,
    })
}

/// Both spectra and the slack of every interlacing inequality
/// `λ_i ≥ μ_i ≥ λ_{i+n−r}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingReport {
    pub subset: Vec<usize>,
    pub full: Vec<f64>,
    pub sub: Vec<f64>,
    /// `λ_i − μ_i`.
    pub upper_slack: Vec<f64>,
    /// `μ_i − λ_{i+n−r}`.
    pub lower_slack: Vec<f64>,
    pub min_slack: f64,
    pub pass: bool,
}

/// Slack below which an interlacing inequality is reported as violated.
pub const INTERLACING_SLACK: f64 = 1e-8;

pub fn check_interlacing(g: &Graph, subset: &[usize], tol: &Tolerances) -> Result<InterlacingReport, SpectralError> {
    let n = g.n();
    let r = subset.len();
    if r == 0 {
        return Err(SpectralError::Subset("subset is empty".into()));
    }
    if r >= n {
        return Err(SpectralError::Subset(format!("subset of size {r} is not proper for n = {n}")));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(SpectralError::Subset("subset repeats a vertex".into()));
    }
    let full = full_spectrum(g, tol)?.eigenvalues;
    let sub = full_spectrum(&g.induced(&sorted)?, tol)?.eigenvalues;
    let upper_slack: Vec<f64> = (0..r).map(|i| full[i] - sub[i]).collect();
    let lower_slack: Vec<f64> = (0..r).map(|i| sub[i] - full[i + n - r]).collect();
    let min_slack = upper_slack
        .iter()
        .chain(&lower_slack)
        .copied()
        .fold(f64::INFINITY, f64::min);
    Ok(InterlacingReport {
        subset: sorted,
        full,
        sub,
        upper_slack,
        lower_slack,
        min_slack,
        pass: min_slack >= -INTERLACING_SLACK,
    })
}
