//! Estimates of `f(m)`: the least 4-cycle count over `m`-edge graphs that
//! meet the spectral condition against `√m` and are not stars.

use crate::graph::{exact_sqrt, Construction, Graph, GraphError};
use crate::par;
use crate::quadcount::count_c4_codegree;
use crate::spectral::{perron, perron_from, SpectralError};
use crate::tolerance::{SpectralMode, Tolerances};
use crate::verify::{clique_pendants_value, enumerate_up_to, rational_string, EnumerateError, BUILTIN_MAX_N};
use num_rational::Ratio;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

/// Consecutive non-improving moves allowed per restart, as a multiple of `m`.
pub const PLATEAU_FACTOR: usize = 10;

/// Local search is only run above the range where 4-cycles may be absent.
pub const LOCAL_SEARCH_MIN_M: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search parameters: {0}")]
    InvalidParams(String),
    #[error("no seed graph meets the spectral condition: {0}")]
    NoSeed(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Exhaustive,
    LocalSearch,
}

/// The three reference bounds, as exact rationals `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub m_over_32: String,
    pub m2_over_2000: String,
    /// `(m−1)(m−2√m)/8`, square `m` only.
    pub upper_prop14: Option<String>,
}

fn ratio_m32(m: usize) -> Ratio<i128> {
    Ratio::new(m as i128, 32)
}

fn ratio_m2(m: usize) -> Ratio<i128> {
    Ratio::new((m as i128) * (m as i128), 2000)
}

impl Bounds {
    pub fn for_m(m: usize) -> Self {
        Bounds {
            m_over_32: rational_string(ratio_m32(m)),
            m2_over_2000: rational_string(ratio_m2(m)),
            upper_prop14: clique_pendants_value(m).map(rational_string),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub seed: u64,
    /// Proposed moves per restart.
    pub iterations: usize,
    pub restarts: usize,
    /// Number of vertices available; `None` picks `⌈√(2m)⌉ + ⌈m/2⌉ + 1`.
    pub n_pool: Option<usize>,
    #[serde(skip)]
    pub record_moves: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            seed: 0,
            iterations: 2000,
            restarts: 4,
            n_pool: None,
            record_moves: false,
        }
    }
}

pub fn default_pool(m: usize) -> usize {
    let root2m = (2.0 * m as f64).sqrt().ceil() as usize;
    root2m + m.div_ceil(2) + 1
}

/// One accepted local-search move.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoveRecord {
    pub restart: usize,
    pub iteration: usize,
    pub removed: (usize, usize),
    pub added: (usize, usize),
    pub c4_before: u64,
    pub c4_after: u64,
    pub lambda_after: f64,
    pub spectral_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchRecord {
    pub m: usize,
    pub mode: SpectralMode,
    pub method: SearchMethod,
    /// What was searched, so the minimum can be reproduced.
    pub universe: String,
    /// Exhaustive: qualifying graphs enumerated. Local search: accepted
    /// states visited, seeds included.
    pub qualifying_count: usize,
    pub f_min: Option<u64>,
    /// graph6 of a minimizer without isolated vertices.
    pub argmin: Option<String>,
    pub argmin_lambda: Option<f64>,
    pub bounds: Bounds,
    pub search_params: Option<SearchParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moves: Option<Vec<MoveRecord>>,
}

#[derive(Debug, Clone)]
struct Candidate {
    f: u64,
    graph6: String,
    lambda: f64,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        (self.f, &self.graph6) < (other.f, &other.graph6)
    }
}

fn pick(best: Option<Candidate>, c: Candidate) -> Option<Candidate> {
    match best {
        Some(b) if !c.better_than(&b) => Some(b),
        _ => Some(c),
    }
}

fn qualifies(g: &Graph, mode: SpectralMode, tol: &Tolerances) -> Result<Option<f64>, SpectralError> {
    if g.m() == 0 || g.is_star_with_isolated() {
        return Ok(None);
    }
    let lambda = perron(g, tol.perron_tol, tol.max_iter)?.lambda;
    Ok(mode.admits(lambda, g.m(), tol.epsilon).then_some(lambda))
}

/// Exact minimum over `graphs` restricted to `m` edges.
pub fn exhaustive_fmin_over(
    graphs: &[Graph],
    universe: &str,
    m: usize,
    mode: SpectralMode,
    tol: &Tolerances,
) -> Result<SearchRecord, SearchError> {
    if m == 0 {
        return Err(SearchError::InvalidParams("m must be positive".into()));
    }
    let with_m: Vec<&Graph> = graphs.iter().filter(|g| g.m() == m).collect();
    let evaluated = par::map(&with_m, |g| -> Result<Option<Candidate>, SpectralError> {
        Ok(qualifies(g, mode, tol)?.map(|lambda| Candidate {
            f: count_c4_codegree(g),
            graph6: g.remove_isolated().0.to_graph6(),
            lambda,
        }))
    });
    let mut best = None;
    let mut qualifying = 0;
    for c in evaluated {
        if let Some(c) = c? {
            qualifying += 1;
            best = pick(best, c);
        }
    }
    Ok(SearchRecord {
        m,
        mode,
        method: SearchMethod::Exhaustive,
        universe: universe.to_owned(),
        qualifying_count: qualifying,
        f_min: best.as_ref().map(|b| b.f),
        argmin: best.as_ref().map(|b| b.graph6.clone()),
        argmin_lambda: best.as_ref().map(|b| b.lambda),
        bounds: Bounds::for_m(m),
        search_params: None,
        moves: None,
    })
}

/// Exact minimum over every isomorphism class on at most `n_max` vertices.
pub fn exhaustive_fmin(m: usize, n_max: usize, mode: SpectralMode, tol: &Tolerances) -> Result<SearchRecord, SearchError> {
    if n_max > BUILTIN_MAX_N {
        return Err(EnumerateError::TooLarge { n: n_max, max: BUILTIN_MAX_N }.into());
    }
    let graphs = enumerate_up_to(n_max)?;
    exhaustive_fmin_over(
        &graphs,
        &format!("all isomorphism classes on 1..={n_max} vertices"),
        m,
        mode,
        tol,
    )
}

fn seed_graph(m: usize, pool: usize, rng: &mut ChaCha8Rng) -> Result<Graph, SearchError> {
    if exact_sqrt(m as u64).is_some() {
        let g = Construction::CliquePlusPendants(m).build()?;
        if g.n() > pool {
            return Err(SearchError::InvalidParams(format!(
                "pool of {pool} vertices cannot hold the {}-vertex seed",
                g.n()
            )));
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        return Ok(Graph::from_edges(pool, &edges)?);
    }
    let t = (m as f64).sqrt().ceil() as usize + 1;
    if t * (t - 1) / 2 > m || t > pool {
        return Err(SearchError::NoSeed(format!("K_{t} does not fit in m = {m} edges on {pool} vertices")));
    }
    let mut g = Construction::Complete(t).build()?;
    g = Graph::from_edges(pool, &g.edges().collect::<Vec<_>>())?;
    while g.m() < m {
        let u = rng.random_range(0..pool);
        let v = rng.random_range(0..pool);
        if u != v && !g.has_edge(u, v) {
            g = g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

struct RestartOutcome {
    best: Option<Candidate>,
    visited: usize,
    moves: Vec<MoveRecord>,
}

fn run_restart(
    m: usize,
    pool: usize,
    restart: usize,
    params: &SearchParams,
    mode: SpectralMode,
    tol: &Tolerances,
) -> Result<RestartOutcome, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(restart as u64);
    let mut g = seed_graph(m, pool, &mut rng)?;
    let cold = perron(&g, tol.perron_tol, tol.max_iter)?;
    if !mode.admits(cold.lambda, m, tol.epsilon) || g.is_star_with_isolated() {
        return Err(SearchError::NoSeed(format!(
            "seed has lambda = {}, sqrt(m) = {}",
            cold.lambda,
            (m as f64).sqrt()
        )));
    }
    let mut vector = cold.vector;
    let mut f = count_c4_codegree(&g);
    let mut best = Some(Candidate {
        f,
        graph6: g.remove_isolated().0.to_graph6(),
        lambda: cold.lambda,
    });
    let mut visited = 1;
    let mut moves = Vec::new();
    let mut plateau = 0;
    let plateau_cap = PLATEAU_FACTOR * m;

    for iteration in 0..params.iterations {
        if plateau >= plateau_cap {
            break;
        }
        plateau += 1;
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let &(u, v) = edges.choose(&mut rng).expect("m >= 1");
        let (x, y) = (rng.random_range(0..pool), rng.random_range(0..pool));
        if x == y || g.has_edge(x, y) {
            continue;
        }
        let next = g.delete_edge(u, v)?.add_edge(x, y)?;
        if next.is_star_with_isolated() {
            continue;
        }
        let f_next = count_c4_codegree(&next);
        if f_next > f || (f_next == f && !rng.random_bool(0.5)) {
            continue;
        }
        let pair = perron_from(&next, tol.perron_tol, tol.max_iter, Some(&vector))?;
        if !mode.admits(pair.lambda, m, tol.epsilon) {
            continue;
        }
        if params.record_moves {
            moves.push(MoveRecord {
                restart,
                iteration,
                removed: (u, v),
                added: (x.min(y), x.max(y)),
                c4_before: f,
                c4_after: f_next,
                lambda_after: pair.lambda,
                spectral_ok: true,
            });
        }
        if f_next < f {
            plateau = 0;
        }
        g = next;
        f = f_next;
        vector = pair.vector;
        visited += 1;
        let graph6 = g.remove_isolated().0.to_graph6();
        let improves = best.as_ref().is_none_or(|b| (f, &graph6) < (b.f, &b.graph6));
        if improves {
            let recheck = perron(&g, tol.perron_tol, tol.max_iter)?;
            if mode.admits(recheck.lambda, m, tol.epsilon) {
                best = pick(
                    best,
                    Candidate {
                        f,
                        graph6,
                        lambda: recheck.lambda,
                    },
                );
            }
        }
    }
    Ok(RestartOutcome { best, visited, moves })
}

/// Randomized rewiring descent from clique-like seeds. Deterministic in
/// `params.seed`; restarts run in parallel and merge by `(f, graph6)`.
pub fn local_search_fmin(
    m: usize,
    params: &SearchParams,
    mode: SpectralMode,
    tol: &Tolerances,
) -> Result<SearchRecord, SearchError> {
    if m < LOCAL_SEARCH_MIN_M {
        return Err(SearchError::InvalidParams(format!("local search needs m >= {LOCAL_SEARCH_MIN_M}, got {m}")));
    }
    if params.iterations == 0 || params.restarts == 0 {
        return Err(SearchError::InvalidParams("iterations and restarts must be positive".into()));
    }
    let pool = params.n_pool.unwrap_or_else(|| default_pool(m));
    if pool * pool.saturating_sub(1) / 2 < m {
        return Err(SearchError::InvalidParams(format!("{pool} vertices cannot carry {m} edges")));
    }
    let outcomes = par::map_range(params.restarts, |r| run_restart(m, pool, r, params, mode, tol));
    let mut best = None;
    let mut visited = 0;
    let mut moves = Vec::new();
    for o in outcomes {
        let o = o?;
        visited += o.visited;
        moves.extend(o.moves);
        if let Some(c) = o.best {
            best = pick(best, c);
        }
    }
    let resolved = SearchParams {
        n_pool: Some(pool),
        ..*params
    };
    Ok(SearchRecord {
        m,
        mode,
        method: SearchMethod::LocalSearch,
        universe: format!("edge rewiring on {pool} vertices"),
        qualifying_count: visited,
        f_min: best.as_ref().map(|b| b.f),
        argmin: best.as_ref().map(|b| b.graph6.clone()),
        argmin_lambda: best.as_ref().map(|b| b.lambda),
        bounds: Bounds::for_m(m),
        search_params: Some(resolved),
        moves: params.record_moves.then_some(moves),
    })
}

/// Rebuilds the witness from its graph6 alone and checks edge count,
/// spectral condition and 4-cycle count.
pub fn witness_is_valid(record: &SearchRecord, tol: &Tolerances) -> Result<bool, SearchError> {
    let (Some(g6), Some(f)) = (&record.argmin, record.f_min) else {
        return Ok(record.qualifying_count == 0);
    };
    let g = Graph::from_graph6(g6)?;
    if g.m() != record.m || g.is_star_with_isolated() {
        return Ok(false);
    }
    let lambda = perron(&g, tol.perron_tol, tol.max_iter)?.lambda;
    Ok(record.mode.admits(lambda, record.m, tol.epsilon) && count_c4_codegree(&g) == f)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub m: usize,
    pub method: SearchMethod,
    pub f_est: Option<u64>,
    pub m_over_32: String,
    pub m2_over_2000: String,
    pub upper_prop14: Option<String>,
    pub at_least_m_over_32: Option<bool>,
    /// Informational: the `m²/2000` bound is only claimed for huge `m`.
    pub at_least_m2_over_2000: Option<bool>,
    pub at_most_upper: Option<bool>,
    /// `f_est / m²`.
    pub ratio_to_m2: Option<f64>,
}

pub fn bound_row(record: &SearchRecord) -> BoundRow {
    let m = record.m;
    let f = record.f_min.map(|f| Ratio::from_integer(f as i128));
    let upper = clique_pendants_value(m);
    BoundRow {
        m,
        method: record.method,
        f_est: record.f_min,
        m_over_32: rational_string(ratio_m32(m)),
        m2_over_2000: rational_string(ratio_m2(m)),
        upper_prop14: upper.map(rational_string),
        at_least_m_over_32: f.map(|f| f >= ratio_m32(m)),
        at_least_m2_over_2000: f.map(|f| f >= ratio_m2(m)),
        at_most_upper: f.zip(upper).map(|(f, u)| f <= u),
        ratio_to_m2: record.f_min.map(|f| f as f64 / (m as f64 * m as f64)),
    }
}

pub fn bound_table(records: &[SearchRecord]) -> Vec<BoundRow> {
    records.iter().map(bound_row).collect()
}

pub fn bound_table_csv(rows: &[BoundRow]) -> String {
    fn opt<T: ToString>(v: &Option<T>) -> String {
        v.as_ref().map(T::to_string).unwrap_or_default()
    }
    let mut out = String::from(
        "m,method,f_est,m_over_32,m2_over_2000,upper_prop14,at_least_m_over_32,at_least_m2_over_2000,at_most_upper\n",
    );
    for r in rows {
        let method = match r.method {
            SearchMethod::Exhaustive => "exhaustive",
            SearchMethod::LocalSearch => "local_search",
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.m,
            method,
            opt(&r.f_est),
            r.m_over_32,
            r.m2_over_2000,
            opt(&r.upper_prop14),
            opt(&r.at_least_m_over_32),
            opt(&r.at_least_m2_over_2000),
            opt(&r.at_most_upper),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn bounds_render_as_rationals() {
        let b = Bounds::for_m(16);
        assert_eq!(b.m_over_32, "1/2");
        assert_eq!(b.m2_over_2000, "16/125");
        assert_eq!(b.upper_prop14.as_deref(), Some("15/1"));
        assert_eq!(Bounds::for_m(100).upper_prop14.as_deref(), Some("990/1"));
        assert_eq!(Bounds::for_m(10).upper_prop14, None);
    }

    #[test]
    fn default_pool_sizes() {
        assert_eq!(default_pool(16), 6 + 8 + 1);
        assert_eq!(default_pool(25), 8 + 13 + 1);
    }

    #[test]
    fn exhaustive_three_edges_strict() {
        let r = exhaustive_fmin(3, 5, SpectralMode::Strict, &t()).unwrap();
        assert_eq!(r.f_min, Some(0));
        // The triangle is the only non-star with λ > √3 among 3-edge graphs.
        assert_eq!(r.argmin.as_deref(), Some("Bw"));
        assert!(witness_is_valid(&r, &t()).unwrap());
    }

    #[test]
    fn exhaustive_six_edges_contains_k23() {
        let r = exhaustive_fmin(6, 5, SpectralMode::Nonstrict, &t()).unwrap();
        assert!(r.qualifying_count > 0);
        assert!(r.f_min.unwrap() <= 3);
        assert!(witness_is_valid(&r, &t()).unwrap());
    }

    #[test]
    fn exhaustive_empty_universe() {
        let r = exhaustive_fmin(12, 4, SpectralMode::Nonstrict, &t()).unwrap();
        assert_eq!(r.qualifying_count, 0);
        assert_eq!(r.f_min, None);
        assert!(exhaustive_fmin(3, 9, SpectralMode::Nonstrict, &t()).is_err());
    }

    #[test]
    fn local_search_sixteen() {
        let p = SearchParams {
            iterations: 300,
            restarts: 2,
            record_moves: true,
            ..SearchParams::default()
        };
        let r = local_search_fmin(16, &p, SpectralMode::Nonstrict, &t()).unwrap();
        assert!(r.f_min.unwrap() <= 15);
        assert!(witness_is_valid(&r, &t()).unwrap());
        for mv in r.moves.as_ref().unwrap() {
            assert!(mv.c4_after <= mv.c4_before && mv.spectral_ok);
        }
        let again = local_search_fmin(16, &p, SpectralMode::Nonstrict, &t()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn local_search_non_square_seed() {
        let p = SearchParams {
            iterations: 100,
            restarts: 1,
            ..SearchParams::default()
        };
        let r = local_search_fmin(12, &p, SpectralMode::Strict, &t()).unwrap();
        assert!(r.f_min.unwrap() >= 1);
        assert!(witness_is_valid(&r, &t()).unwrap());
        assert!(local_search_fmin(9, &p, SpectralMode::Strict, &t()).is_err());
    }

    #[test]
    fn csv_rows() {
        let p = SearchParams {
            iterations: 50,
            restarts: 1,
            ..SearchParams::default()
        };
        let r = local_search_fmin(16, &p, SpectralMode::Nonstrict, &t()).unwrap();
        let rows = bound_table(&[r]);
        assert_eq!(rows[0].at_most_upper, Some(true));
        assert_eq!(rows[0].at_least_m_over_32, Some(true));
        let csv = bound_table_csv(&rows);
        let line = csv.lines().nth(1).unwrap();
        assert!(line.starts_with("16,local_search,"));
        assert!(line.contains(",1/2,16/125,15/1,true,"));
    }
}
