//! Perron eigenpair by shifted power iteration.
//!
//! Iterates on `A + I` so that bipartite components (where `±λ` share a
//! modulus) still converge; the Rayleigh quotient `xᵀAx` is the reported
//! eigenvalue. Each connected component is solved separately and the
//! dominant one is kept, so the returned vector is supported on a single
//! component.

use super::SpectralError;
use crate::graph::Graph;
use serde::Serialize;

const SHIFT: f64 = 1.0;
/// Two components whose spectral radii differ by less than this are tied.
const TIE: f64 = 1e-9;

/// Dominant eigenvalue and unit nonnegative eigenvector of the adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronResult {
    pub lambda: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// `‖Ax − λx‖∞` at the returned iterate.
    pub residual: f64,
}

/// `y = A x` restricted to `support`.
#[inline]
fn adjacency_apply(g: &Graph, support: &[usize], x: &[f64], y: &mut [f64]) {
    for &u in support {
        y[u] = g.neighbors(u).map(|v| x[v]).sum();
    }
}

/// `‖Ax − λx‖∞` over all vertices.
pub fn residual(g: &Graph, lambda: f64, x: &[f64]) -> f64 {
    (0..g.n())
        .map(|u| {
            let ax: f64 = g.neighbors(u).map(|v| x[v]).sum();
            (ax - lambda * x[u]).abs()
        })
        .fold(0.0, f64::max)
}

struct ComponentPair {
    lambda: f64,
    residual: f64,
    iterations: usize,
    converged: bool,
}

fn iterate_component(
    g: &Graph,
    support: &[usize],
    x: &mut [f64],
    tol: f64,
    max_iter: usize,
) -> ComponentPair {
    let mut ax = vec![0.0; g.n()];
    let mut lambda = 0.0;
    let mut res = f64::INFINITY;
    for it in 0..=max_iter {
        adjacency_apply(g, support, x, &mut ax);
        lambda = support.iter().map(|&u| x[u] * ax[u]).sum();
        res = support
            .iter()
            .map(|&u| (ax[u] - lambda * x[u]).abs())
            .fold(0.0, f64::max);
        if res <= tol {
            return ComponentPair {
                lambda,
                residual: res,
                iterations: it,
                converged: true,
            };
        }
        if it == max_iter {
            break;
        }
        let norm = support
            .iter()
            .map(|&u| {
                let y = ax[u] + SHIFT * x[u];
                y * y
            })
            .sum::<f64>()
            .sqrt();
        for &u in support {
            x[u] = (ax[u] + SHIFT * x[u]) / norm;
        }
    }
    ComponentPair {
        lambda,
        residual: res,
        iterations: max_iter,
        converged: false,
    }
}

fn seed_vector(support: &[usize], start: Option<&[f64]>, x: &mut [f64]) {
    let uniform = 1.0 / (support.len() as f64).sqrt();
    let warm = start.map(|s| support.iter().map(|&u| s[u].max(0.0)).collect::<Vec<_>>());
    match warm {
        Some(w) if w.iter().any(|&v| v > 0.0) => {
            // Keep every entry positive so the dominant direction is present.
            let floor = 1e-12 * uniform;
            let norm = w.iter().map(|v| (v + floor) * (v + floor)).sum::<f64>().sqrt();
            for (&u, v) in support.iter().zip(w) {
                x[u] = (v + floor) / norm;
            }
        }
        _ => {
            for &u in support {
                x[u] = uniform;
            }
        }
    }
}

/// Perron eigenpair from the all-ones start vector.
pub fn perron(g: &Graph, tol: f64, max_iter: usize) -> Result<PerronResult, SpectralError> {
    perron_from(g, tol, max_iter, None)
}

/// Perron eigenpair, optionally warm-started from `start` (indexed like `g`).
pub fn perron_from(
    g: &Graph,
    tol: f64,
    max_iter: usize,
    start: Option<&[f64]>,
) -> Result<PerronResult, SpectralError> {
    if g.m() == 0 {
        return Err(SpectralError::Degenerate);
    }
    if let Some(s) = start {
        if s.len() != g.n() {
            return Err(SpectralError::Dimension {
                expected: g.n(),
                found: s.len(),
            });
        }
    }
    let degrees = g.degrees();
    // (lambda, representative degree, representative vertex, vector, residual)
    let mut best: Option<(f64, usize, usize, Vec<f64>, f64)> = None;
    let mut total_iterations = 0;
    for comp in g.components().into_iter().filter(|c| c.len() > 1) {
        let mut x = vec![0.0; g.n()];
        seed_vector(&comp, start, &mut x);
        let pair = iterate_component(g, &comp, &mut x, tol, max_iter);
        total_iterations += pair.iterations;
        if !pair.converged {
            return Err(SpectralError::NoConvergence {
                iterations: total_iterations,
                residual: pair.residual,
                lambda: pair.lambda,
                vector: x,
            });
        }
        // Representative: lowest-indexed vertex of maximum degree in the component.
        let rep_degree = comp.iter().map(|&u| degrees[u]).max().unwrap_or(0);
        let rep = comp.iter().copied().find(|&u| degrees[u] == rep_degree).unwrap_or(0);
        let replace = match &best {
            None => true,
            Some((lam, best_deg, best_rep, _, _)) => {
                if pair.lambda > lam + TIE {
                    true
                } else if pair.lambda >= lam - TIE {
                    (rep_degree, std::cmp::Reverse(rep)) > (*best_deg, std::cmp::Reverse(*best_rep))
                } else {
                    false
                }
            }
        };
        if replace {
            best = Some((pair.lambda, rep_degree, rep, x, pair.residual));
        }
    }
    let (lambda, _, _, vector, residual) = best.expect("a graph with an edge has a nontrivial component");
    Ok(PerronResult {
        lambda,
        vector,
        iterations: total_iterations,
        residual,
    })
}
