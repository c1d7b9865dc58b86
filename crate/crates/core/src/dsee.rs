//! Deleting small eigenvalue edges.
//!
//! Starting from `G_0 = G`, repeatedly compute the Perron vector `x` of
//! `G_i` and delete an edge `uv` with `x_u x_v ≤ 1/(9√e(G_i))`, stopping
//! after `⌊m/2⌋` deletions or when no edge is small. Every deletion is
//! recorded together with the spectral radii before and after it and the
//! lower bound `√(m−i−1)` that the radius must keep.
//!
//! Edge labels in a trace always refer to the vertex labels of the input
//! graph; isolated vertices are dropped from each `G_i` before its Perron
//! vector is computed.

use crate::graph::Graph;
use crate::quadcount::count_c4_codegree;
use crate::spectral::{perron_from, residual, PerronResult, SpectralError};
use crate::tolerance::Tolerances;
use serde::Serialize;
use thiserror::Error;

/// Products that differ by at most this much are ties, broken lexicographically.
const PRODUCT_TIE: f64 = 1e-13;

/// Edge count below which the size hypothesis of the large-product bound fails.
pub const HYPOTHESIS_MIN_EDGES: f64 = 1.8e9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DseeError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("stale eigenpair: residual {residual:e} exceeds {tolerance:e}")]
    StaleEigenpair { residual: f64, tolerance: f64 },
    #[error("eigenpair at step {step} failed: {source}")]
    Spectral {
        step: usize,
        source: SpectralError,
        partial: Box<DseeTrace>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmallEdge {
    pub u: usize,
    pub v: usize,
    pub product: f64,
}

/// `1/(9√m)`.
pub fn small_edge_threshold(m: usize) -> f64 {
    1.0 / (9.0 * (m as f64).sqrt())
}

fn check_fresh(g: &Graph, pair: &PerronResult, tol: &Tolerances) -> Result<(), DseeError> {
    let limit = tol.epsilon.max(tol.perron_tol);
    if pair.vector.len() != g.n() {
        return Err(DseeError::StaleEigenpair {
            residual: f64::INFINITY,
            tolerance: limit,
        });
    }
    let r = residual(g, pair.lambda, &pair.vector);
    if r.is_nan() || r > limit {
        return Err(DseeError::StaleEigenpair {
            residual: r,
            tolerance: limit,
        });
    }
    Ok(())
}

/// The edge of least Perron product, provided it is at most `1/(9√m) + ε`.
pub fn dsee_step(g: &Graph, pair: &PerronResult, tol: &Tolerances) -> Result<Option<SmallEdge>, DseeError> {
    if g.m() == 0 {
        return Err(DseeError::NoEdges);
    }
    check_fresh(g, pair, tol)?;
    let threshold = small_edge_threshold(g.m()) + tol.epsilon;
    let x = &pair.vector;
    let mut best: Option<SmallEdge> = None;
    for (u, v) in g.edges() {
        let product = x[u] * x[v];
        if product > threshold {
            continue;
        }
        match best {
            Some(b) if product >= b.product - PRODUCT_TIE => {}
            _ => best = Some(SmallEdge { u, v, product }),
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DseeStep {
    pub index: usize,
    pub deleted_edge: (usize, usize),
    pub product: f64,
    /// `1/(9√e(G_i))`.
    pub threshold: f64,
    pub lambda_before: f64,
    pub lambda_after: f64,
    /// `√(m − i − 1)`.
    pub claim8_bound: f64,
    pub claim8_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    NoSmallEdge,
    StepCap,
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DseeTrace {
    pub initial_m: usize,
    pub initial_lambda: f64,
    pub initial_is_star: bool,
    pub steps: Vec<DseeStep>,
    pub k: usize,
    /// `G_k` with isolated vertices removed.
    pub terminal_graph: Graph,
    pub stop_reason: StopReason,
    pub terminal_is_star: bool,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DseeOptions {
    pub tolerances: Tolerances,
    /// Start each power iteration from the previous Perron vector.
    pub warm_start: bool,
}

impl DseeOptions {
    pub fn new(tolerances: Tolerances) -> Self {
        Self {
            tolerances,
            warm_start: false,
        }
    }
}

/// Runs the deletion procedure to completion.
pub fn dsee_run(g: &Graph, opts: &DseeOptions) -> Result<DseeTrace, DseeError> {
    let tol = &opts.tolerances;
    let m = g.m();
    if m == 0 {
        return Err(DseeError::NoEdges);
    }
    let cap = m / 2;
    let mut current = g.clone();
    let mut steps: Vec<DseeStep> = Vec::new();
    // Previous Perron vector in input labels, for warm starts.
    let mut previous: Option<Vec<f64>> = None;
    let mut initial_lambda = f64::NAN;

    let finish = |current: &Graph, steps: Vec<DseeStep>, stop: StopReason, initial_lambda: f64| {
        let (terminal, _) = current.remove_isolated();
        DseeTrace {
            initial_m: m,
            initial_lambda,
            initial_is_star: g.is_star_with_isolated(),
            k: steps.len(),
            steps,
            terminal_is_star: terminal.is_star_with_isolated(),
            terminal_graph: terminal,
            stop_reason: stop,
        }
    };

    loop {
        let i = steps.len();
        let (core, labels) = current.remove_isolated_with_map();
        if core.m() == 0 {
            if let Some(last) = steps.last_mut() {
                last.lambda_after = 0.0;
                last.claim8_ok = last.claim8_bound <= tol.epsilon;
            }
            return Ok(finish(&current, steps, StopReason::Degenerate, initial_lambda));
        }
        let start: Option<Vec<f64>> = match (&previous, opts.warm_start) {
            (Some(p), true) => Some(labels.iter().map(|&o| p[o]).collect()),
            _ => None,
        };
        let pair = match perron_from(&core, tol.perron_tol, tol.max_iter, start.as_deref()) {
            Ok(p) => p,
            Err(source) => {
                return Err(DseeError::Spectral {
                    step: i,
                    source,
                    partial: Box::new(finish(&current, steps, StopReason::Degenerate, initial_lambda)),
                })
            }
        };
        if i == 0 {
            initial_lambda = pair.lambda;
        }
        if let Some(last) = steps.last_mut() {
            last.lambda_after = pair.lambda;
            last.claim8_ok = pair.lambda >= last.claim8_bound - tol.epsilon;
        }
        if i == cap {
            return Ok(finish(&current, steps, StopReason::StepCap, initial_lambda));
        }
        let Some(edge) = dsee_step(&core, &pair, tol)? else {
            return Ok(finish(&current, steps, StopReason::NoSmallEdge, initial_lambda));
        };
        let (u, v) = (labels[edge.u], labels[edge.v]);
        current = current.delete_edge(u, v).expect("selected edge exists");
        let mut full = vec![0.0; g.n()];
        for (k, &o) in labels.iter().enumerate() {
            full[o] = pair.vector[k];
        }
        previous = Some(full);
        steps.push(DseeStep {
            index: i,
            deleted_edge: (u.min(v), u.max(v)),
            product: edge.product,
            threshold: small_edge_threshold(core.m()),
            lambda_before: pair.lambda,
            lambda_after: f64::NAN,
            claim8_bound: ((m - i - 1) as f64).sqrt(),
            claim8_ok: false,
        });
    }
}

/// Per-step comparison of the recorded radii against the decay bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecayCheck {
    pub index: usize,
    /// `√m − 2(i+1)/(9√(m−i−1))`.
    pub cumulative_bound: f64,
    /// `λ(G_i) − 2/(9√e(G_i))`.
    pub step_bound: f64,
    /// `λ(G_i) − 2 x_u x_v`.
    pub rayleigh_bound: f64,
    pub cumulative_ok: bool,
    pub step_ok: bool,
    pub rayleigh_ok: bool,
}

pub fn lambda_decay_checks(trace: &DseeTrace, epsilon: f64) -> Vec<DecayCheck> {
    let m = trace.initial_m as f64;
    trace
        .steps
        .iter()
        .map(|s| {
            let i = s.index as f64;
            let cumulative_bound = m.sqrt() - 2.0 * (i + 1.0) / (9.0 * (m - i - 1.0).sqrt());
            let step_bound = s.lambda_before - 2.0 / (9.0 * (m - i).sqrt());
            let rayleigh_bound = s.lambda_before - 2.0 * s.product;
            DecayCheck {
                index: s.index,
                cumulative_bound,
                step_bound,
                rayleigh_bound,
                cumulative_ok: s.lambda_after >= cumulative_bound - epsilon,
                step_ok: s.lambda_after >= step_bound - epsilon,
                rayleigh_ok: s.lambda_after >= rayleigh_bound - epsilon,
            }
        })
        .collect()
}

/// Both the cumulative and the single-step decay bounds hold at every step.
pub fn check_lambda_decay(trace: &DseeTrace, epsilon: f64) -> bool {
    lambda_decay_checks(trace, epsilon)
        .iter()
        .all(|c| c.cumulative_ok && c.step_ok)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisConclusion {
    StarExempt,
    HypothesisUnmet,
    Satisfied,
    Violated,
}

/// Hypotheses and conclusion of the large-product bound on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub m: usize,
    pub lambda: f64,
    pub sqrt_m: f64,
    pub spectral_ok: bool,
    pub min_edge: Option<(usize, usize)>,
    pub min_edge_product: Option<f64>,
    pub threshold: f64,
    pub products_ok: bool,
    pub is_star: bool,
    /// `m ≥ 1.8·10⁹`; never true at desk scale, so a violation is only a data point.
    pub size_hypothesis_met: bool,
    pub c4_count: Option<u64>,
    /// `m²/500`.
    pub c4_target: f64,
    pub conclusion: HypothesisConclusion,
}

pub fn product_hypothesis(g: &Graph, pair: &PerronResult, tol: &Tolerances) -> HypothesisReport {
    let m = g.m();
    let sqrt_m = (m as f64).sqrt();
    let threshold = small_edge_threshold(m);
    let x = &pair.vector;
    let min = g
        .edges()
        .map(|(u, v)| ((u, v), x.get(u).copied().unwrap_or(0.0) * x.get(v).copied().unwrap_or(0.0)))
        .fold(None::<((usize, usize), f64)>, |acc, (e, p)| match acc {
            Some((_, q)) if q <= p => acc,
            _ => Some((e, p)),
        });
    let spectral_ok = m > 0 && pair.lambda >= sqrt_m - tol.epsilon;
    let products_ok = min.is_some_and(|(_, p)| p > threshold - tol.epsilon);
    let is_star = g.is_star_with_isolated();
    let c4_target = (m as f64) * (m as f64) / 500.0;
    let (conclusion, c4_count) = if !(spectral_ok && products_ok) {
        (HypothesisConclusion::HypothesisUnmet, None)
    } else if is_star {
        (HypothesisConclusion::StarExempt, None)
    } else {
        let f = count_c4_codegree(g);
        let verdict = if f as f64 >= c4_target {
            HypothesisConclusion::Satisfied
        } else {
            HypothesisConclusion::Violated
        };
        (verdict, Some(f))
    };
    HypothesisReport {
        m,
        lambda: pair.lambda,
        sqrt_m,
        spectral_ok,
        min_edge: min.map(|(e, _)| e),
        min_edge_product: min.map(|(_, p)| p),
        threshold,
        products_ok,
        is_star,
        size_hypothesis_met: m as f64 >= HYPOTHESIS_MIN_EDGES,
        c4_count,
        c4_target,
        conclusion,
    }
}
