//! One checker per spectral or extremal inequality, each returning a signed
//! slack, plus exhaustive sweeps over small-graph universes.

mod enumerate;
mod sweep;

pub use enumerate::{canonical_form, enumerate_graphs, enumerate_up_to, EnumerateError, BUILTIN_MAX_N, GRAPH_COUNTS};
pub use sweep::{sweep_graphs, sweep_small_graphs, ClaimTally, SweepCase, SweepSummary};

use crate::graph::Graph;
use crate::quadcount::{count_c4_codegree, CountError};
use crate::spectral::{check_interlacing, perron, SpectralError};
use crate::tolerance::{SpectralMode, Tolerances};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Edge count from which the `m²/2000` and `n⁴/32000` bounds are claimed.
pub const LARGE_M_HYPOTHESIS: f64 = 3.6e9;

/// Smallest `m` at which 4-cycle existence is asserted.
pub const C4_EXISTENCE_MIN_M: usize = 10;

/// The `m/32` bound rests on a `K_{2,r+1}` bound that needs `m ≥ 16r²`
/// with `r ≥ 1`.
pub const M32_MIN_M: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClaimId {
    #[serde(rename = "hofmeister")]
    Hofmeister,
    #[serde(rename = "degree_square_bound")]
    DegreeSquareBound,
    #[serde(rename = "bipartite_bound")]
    BipartiteBound,
    #[serde(rename = "interlacing")]
    Interlacing,
    #[serde(rename = "thm11_c4_existence")]
    C4Existence,
    #[serde(rename = "fm_lower_m32")]
    FmLowerM32,
    #[serde(rename = "fm_lower_m2_2000")]
    FmLowerM2Over2000,
    #[serde(rename = "fm_upper_prop14")]
    FmUpperCliquePendants,
    #[serde(rename = "thm42_n4")]
    DenseN4,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::Hofmeister,
        ClaimId::DegreeSquareBound,
        ClaimId::BipartiteBound,
        ClaimId::Interlacing,
        ClaimId::C4Existence,
        ClaimId::FmLowerM32,
        ClaimId::FmLowerM2Over2000,
        ClaimId::FmUpperCliquePendants,
        ClaimId::DenseN4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Hofmeister => "hofmeister",
            ClaimId::DegreeSquareBound => "degree_square_bound",
            ClaimId::BipartiteBound => "bipartite_bound",
            ClaimId::Interlacing => "interlacing",
            ClaimId::C4Existence => "thm11_c4_existence",
            ClaimId::FmLowerM32 => "fm_lower_m32",
            ClaimId::FmLowerM2Over2000 => "fm_lower_m2_2000",
            ClaimId::FmUpperCliquePendants => "fm_upper_prop14",
            ClaimId::DenseN4 => "thm42_n4",
        }
    }

    fn is_fm(self) -> bool {
        matches!(
            self,
            ClaimId::FmLowerM32 | ClaimId::FmLowerM2Over2000 | ClaimId::FmUpperCliquePendants
        )
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
                format!("unknown claim {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("out of hypothesis: {0}")]
    OutOfHypothesis(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Count(#[from] CountError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub claim: ClaimId,
    pub pass: bool,
    /// Signed margin; positive means the inequality holds with room to spare.
    pub slack: f64,
    /// Numeric equality, `|slack| ≤ ε`, where the claim has an equality case.
    pub equality_case: Option<bool>,
    /// Structural equality classification, to be compared with `equality_case`.
    pub equality_structural: Option<bool>,
    /// Set when the claim's hypothesis is out of reach, so the result is
    /// informational only.
    pub out_of_hypothesis: Option<String>,
    pub details: Map<String, Value>,
}

impl VerifyReport {
    fn new(claim: ClaimId, slack: f64, epsilon: f64) -> Self {
        assert!(slack.is_finite(), "{claim}: non-finite slack");
        VerifyReport {
            claim,
            pass: slack >= -epsilon,
            slack,
            equality_case: None,
            equality_structural: None,
            out_of_hypothesis: None,
            details: Map::new(),
        }
    }

    fn with_equality(mut self, numeric: bool, structural: bool) -> Self {
        self.equality_case = Some(numeric);
        self.equality_structural = Some(structural);
        self
    }

    fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_owned(), value.into());
        self
    }

    /// Numeric and structural equality classifications disagree.
    pub fn equality_mismatch(&self) -> bool {
        matches!((self.equality_case, self.equality_structural), (Some(a), Some(b)) if a != b)
    }
}

pub(crate) fn rational_string(r: Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn require_edges(g: &Graph, claim: ClaimId) -> Result<(), VerifyError> {
    if g.m() == 0 {
        return Err(VerifyError::OutOfHypothesis(format!("{claim} needs at least one edge")));
    }
    Ok(())
}

/// `λ(G)`, zero for edgeless graphs.
pub fn spectral_radius(g: &Graph, tol: &Tolerances) -> Result<f64, SpectralError> {
    if g.m() == 0 {
        return Ok(0.0);
    }
    Ok(perron(g, tol.perron_tol, tol.max_iter)?.lambda)
}

/// Every non-trivial component is regular or semi-regular bipartite, and all
/// of them share the same `λ²` (`d²` or `pq`). Exactly the graphs with
/// `λ² = M/n` once isolated vertices are gone.
pub fn is_hofmeister_extremal(core: &Graph) -> bool {
    let mut common: Option<usize> = None;
    for comp in core.components() {
        if comp.len() == 1 {
            continue;
        }
        let sub = core.induced(&comp).expect("component vertices are in range");
        let d = sub.degrees();
        let square = if sub.is_regular() {
            d[0] * d[0]
        } else if let Some(color) = sub.bipartition() {
            let side = |c: u8| -> Vec<usize> { (0..sub.n()).filter(|&v| color[v] == c).map(|v| d[v]).collect() };
            let (a, b) = (side(0), side(1));
            if a.windows(2).any(|w| w[0] != w[1]) || b.windows(2).any(|w| w[0] != w[1]) {
                return false;
            }
            a[0] * b[0]
        } else {
            return false;
        };
        match common {
            Some(s) if s != square => return false,
            _ => common = Some(square),
        }
    }
    common.is_some()
}

/// `λ ≥ √(M/n)` on the graph without its isolated vertices.
pub fn verify_hofmeister(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    require_edges(g, ClaimId::Hofmeister)?;
    let (core, removed) = g.remove_isolated();
    let lambda = spectral_radius(&core, tol)?;
    let big_m = core.degree_stats().degree_square_sum;
    let bound = (big_m as f64 / core.n() as f64).sqrt();
    let slack = lambda - bound;
    let structural = is_hofmeister_extremal(&core);
    Ok(VerifyReport::new(ClaimId::Hofmeister, slack, tol.epsilon)
        .with_equality(slack.abs() <= tol.epsilon, structural)
        .detail("lambda", lambda)
        .detail("degree_square_sum", big_m)
        .detail("n", core.n())
        .detail("isolated_removed", removed)
        .detail("bound", bound))
}

/// `M ≤ m² + m`, in exact integers; equality on stars.
pub fn verify_degree_square_bound(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    require_edges(g, ClaimId::DegreeSquareBound)?;
    let m = g.m() as i128;
    let big_m = g.degree_stats().degree_square_sum as i128;
    let slack = m * m + m - big_m;
    Ok(VerifyReport::new(ClaimId::DegreeSquareBound, slack as f64, tol.epsilon)
        .with_equality(slack == 0, g.is_star_with_isolated())
        .detail("m", g.m())
        .detail("degree_square_sum", big_m as u64)
        .detail("bound", (m * m + m) as u64))
}

/// `λ ≤ √m` on bipartite graphs; equality on complete bipartite graphs.
pub fn verify_bipartite_bound(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    require_edges(g, ClaimId::BipartiteBound)?;
    if !g.is_bipartite() {
        return Err(VerifyError::Domain("graph is not bipartite".into()));
    }
    let lambda = spectral_radius(g, tol)?;
    let root = (g.m() as f64).sqrt();
    let slack = root - lambda;
    Ok(VerifyReport::new(ClaimId::BipartiteBound, slack, tol.epsilon)
        .with_equality(slack.abs() <= tol.epsilon, g.is_complete_bipartite_with_isolated())
        .detail("lambda", lambda)
        .detail("sqrt_m", root))
}

/// Cauchy interlacing for the principal submatrix on `subset`.
pub fn verify_interlacing(g: &Graph, subset: &[usize], tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    let rep = check_interlacing(g, subset, tol)?;
    Ok(VerifyReport::new(ClaimId::Interlacing, rep.min_slack, tol.epsilon)
        .detail("subset", json!(rep.subset))
        .detail("full", json!(rep.full))
        .detail("sub", json!(rep.sub))
        .detail("upper_slack", json!(rep.upper_slack))
        .detail("lower_slack", json!(rep.lower_slack)))
}

/// Interlacing for every single-vertex deletion; the slack is the worst one.
pub fn verify_interlacing_deletions(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    let n = g.n();
    if n < 2 {
        return Err(VerifyError::OutOfHypothesis("interlacing needs a proper non-empty subset".into()));
    }
    let mut worst: Option<(usize, f64)> = None;
    for drop in 0..n {
        let subset: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
        let rep = check_interlacing(g, &subset, tol)?;
        if worst.is_none_or(|(_, s)| rep.min_slack < s) {
            worst = Some((drop, rep.min_slack));
        }
    }
    let (drop, slack) = worst.expect("n >= 2");
    Ok(VerifyReport::new(ClaimId::Interlacing, slack, tol.epsilon)
        .detail("subsets", n)
        .detail("worst_deleted_vertex", drop))
}

/// For `m ≥ 10`: `λ ≥ √m` forces a 4-cycle unless the graph is a star.
///
/// The comparison is `λ ≥ √m − ε`; the strict form `λ > √m` is weaker and
/// implied.
pub fn verify_c4_existence(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    let m = g.m();
    if m < C4_EXISTENCE_MIN_M {
        return Err(VerifyError::OutOfHypothesis(format!("m = {m} < {C4_EXISTENCE_MIN_M}")));
    }
    let lambda = spectral_radius(g, tol)?;
    let root = (m as f64).sqrt();
    let f = count_c4_codegree(g);
    let star = g.is_star_with_isolated();
    let below = lambda < root - tol.epsilon;
    let fired = if below {
        "spectral_condition_unmet"
    } else if f >= 1 {
        "contains_c4"
    } else if star {
        "star_exemption"
    } else {
        "none"
    };
    let pass = below || f >= 1 || star;
    let slack = if pass {
        let mut s = (root - tol.epsilon) - lambda;
        if f >= 1 {
            s = s.max(f as f64 - 1.0);
        }
        if star {
            s = s.max(0.0);
        }
        s
    } else {
        -1.0
    };
    Ok(VerifyReport::new(ClaimId::C4Existence, slack, tol.epsilon)
        .detail("lambda", lambda)
        .detail("sqrt_m", root)
        .detail("c4_count", f)
        .detail("is_star", star)
        .detail("disjunct", fired)
        .detail("comparison", "lambda >= sqrt(m); lambda > sqrt(m) is the strict variant"))
}

/// `(m−1)(m−2√m)/8` for square `m`.
pub fn clique_pendants_value(m: usize) -> Option<Ratio<i128>> {
    let s = crate::graph::exact_sqrt(m as u64)? as i128;
    let m = m as i128;
    Some(Ratio::new((m - 1) * (m - 2 * s), 8))
}

/// Isomorphic to `K_s⁺` with `s = √m + 1`, up to isolated vertices.
pub fn is_clique_plus_pendants(g: &Graph) -> bool {
    let m = g.m();
    let Some(r) = crate::graph::exact_sqrt(m as u64) else {
        return false;
    };
    let s = r as usize + 1;
    let clique_edges = s * (s - 1) / 2;
    if m < clique_edges || s < 2 {
        return false;
    }
    let pendants = m - clique_edges;
    let (core, _) = g.remove_isolated();
    if core.n() != s + pendants {
        return false;
    }
    let leaves: Vec<usize> = (0..core.n()).filter(|&v| core.degree(v) == 1).collect();
    let keep: Vec<usize> = if pendants == 0 {
        (0..core.n()).collect()
    } else {
        // Each pendant hangs off the same clique vertex.
        let hubs: Vec<usize> = leaves.iter().map(|&l| core.neighbors(l).next().expect("degree 1")).collect();
        let hub = match hubs.iter().find(|&&h| core.degree(h) > 1) {
            Some(&h) => h,
            None => return false,
        };
        let attached: Vec<usize> = leaves.iter().copied().filter(|&l| core.has_edge(l, hub)).collect();
        if attached.len() < pendants {
            return false;
        }
        let drop = &attached[..pendants];
        (0..core.n()).filter(|v| !drop.contains(v)).collect()
    };
    let rest = core.induced(&keep).expect("in range");
    rest.n() == s && rest.m() == clique_edges
}

/// Lower bounds `m/32` and `m²/2000` on `f(G)`, and equality with the
/// clique-plus-pendants value when `G` is that graph.
pub fn verify_fm_bounds(g: &Graph, mode: SpectralMode, tol: &Tolerances) -> Result<Vec<VerifyReport>, VerifyError> {
    let m = g.m();
    require_edges(g, ClaimId::FmLowerM32)?;
    let lambda = spectral_radius(g, tol)?;
    let root = (m as f64).sqrt();
    if !mode.admits(lambda, m, tol.epsilon) {
        return Err(VerifyError::Domain(format!(
            "spectral condition ({mode}) unmet: lambda = {lambda}, sqrt(m) = {root}"
        )));
    }
    if g.is_star_with_isolated() {
        return Err(VerifyError::OutOfHypothesis("graph is a star".into()));
    }
    let f = count_c4_codegree(g);
    let fr = Ratio::from_integer(f as i128);
    let mi = m as i128;
    let m32 = Ratio::new(mi, 32);
    let m2 = Ratio::new(mi * mi, 2000);
    let to_f = |r: Ratio<i128>| *r.numer() as f64 / *r.denom() as f64;
    let mut out = vec![
        {
            let mut r = VerifyReport::new(ClaimId::FmLowerM32, to_f(fr - m32), tol.epsilon)
                .detail("c4_count", f)
                .detail("bound", rational_string(m32))
                .detail("lambda", lambda);
            if m < M32_MIN_M {
                r.out_of_hypothesis = Some(format!("m = {m} < {M32_MIN_M}"));
            }
            r
        },
        {
            let mut r = VerifyReport::new(ClaimId::FmLowerM2Over2000, to_f(fr - m2), tol.epsilon)
                .detail("c4_count", f)
                .detail("bound", rational_string(m2))
                .detail("lambda", lambda);
            if (m as f64) < LARGE_M_HYPOTHESIS {
                r.out_of_hypothesis = Some(format!("m = {m} < 3.6e9"));
            }
            r
        },
    ];
    if is_clique_plus_pendants(g) {
        let value = clique_pendants_value(m).expect("recognized graphs have square m");
        let gap = fr - value;
        let slack = -to_f(if gap < Ratio::from_integer(0) { -gap } else { gap });
        out.push(
            VerifyReport::new(ClaimId::FmUpperCliquePendants, slack, tol.epsilon)
                .with_equality(gap == Ratio::from_integer(0), true)
                .detail("c4_count", f)
                .detail("value", rational_string(value)),
        );
    }
    Ok(out)
}

/// For `m > n²/4`: `f(G) ≥ n⁴/32000`, with the premise `λ ≥ 2m/n`.
pub fn verify_dense_n4(g: &Graph, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    let n = g.n() as i128;
    let m = g.m() as i128;
    if 4 * m <= n * n {
        return Err(VerifyError::OutOfHypothesis(format!("m = {m} <= n^2/4 = {}", rational_string(Ratio::new(n * n, 4)))));
    }
    let f = count_c4_codegree(g);
    let bound = Ratio::new(n.pow(4), 32000);
    let slack = f as f64 - *bound.numer() as f64 / *bound.denom() as f64;
    let lambda = spectral_radius(g, tol)?;
    let average = 2.0 * m as f64 / n as f64;
    let mut r = VerifyReport::new(ClaimId::DenseN4, slack, tol.epsilon)
        .detail("c4_count", f)
        .detail("bound", rational_string(bound))
        .detail("lambda", lambda)
        .detail("average_degree_bound", average)
        .detail("average_degree_slack", lambda - average);
    if (m as f64) < LARGE_M_HYPOTHESIS {
        r.out_of_hypothesis = Some(format!("m = {m} < 3.6e9"));
    }
    Ok(r)
}

/// Applies one claim to a graph; interlacing uses every single-vertex
/// deletion and the `f(m)` claims pick the matching report.
pub fn verify_claim(g: &Graph, claim: ClaimId, mode: SpectralMode, tol: &Tolerances) -> Result<VerifyReport, VerifyError> {
    match claim {
        ClaimId::Hofmeister => verify_hofmeister(g, tol),
        ClaimId::DegreeSquareBound => verify_degree_square_bound(g, tol),
        ClaimId::BipartiteBound => verify_bipartite_bound(g, tol),
        ClaimId::Interlacing => verify_interlacing_deletions(g, tol),
        ClaimId::C4Existence => verify_c4_existence(g, tol),
        ClaimId::DenseN4 => verify_dense_n4(g, tol),
        fm => {
            debug_assert!(fm.is_fm());
            verify_fm_bounds(g, mode, tol)?
                .into_iter()
                .find(|r| r.claim == fm)
                .ok_or_else(|| VerifyError::Domain("not a clique-plus-pendants graph".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Construction;

    fn build(c: Construction) -> Graph {
        c.build().unwrap()
    }

    fn t() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn claim_names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), json!(c.name()));
        }
        assert!("lemma99".parse::<ClaimId>().is_err());
    }

    #[test]
    fn hofmeister_examples() {
        let p = verify_hofmeister(&build(Construction::Petersen), &t()).unwrap();
        assert!(p.slack.abs() < 1e-9 && p.equality_case == Some(true) && p.equality_structural == Some(true));
        let p3 = verify_hofmeister(&build(Construction::Path(3)), &t()).unwrap();
        assert_eq!(p3.equality_case, Some(true));
        assert_eq!(p3.equality_structural, Some(true));
        let p4 = verify_hofmeister(&build(Construction::Path(4)), &t()).unwrap();
        let expected = (1.0 + 5f64.sqrt()) / 2.0 - 2.5f64.sqrt();
        assert!((p4.slack - expected).abs() < 1e-10);
        assert_eq!(p4.equality_case, Some(false));
        assert_eq!(p4.equality_structural, Some(false));
        assert!(p4.pass);
    }

    #[test]
    fn hofmeister_mixed_components() {
        // K3 and K_{1,4} share λ = 2 but M/n is 4 and 4, so equality holds.
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (3, 6), (3, 7)]).unwrap();
        let r = verify_hofmeister(&g, &t()).unwrap();
        assert_eq!(r.equality_case, Some(true));
        assert_eq!(r.equality_structural, Some(true));
        // K3 beside K2: both regular but λ differs.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let r = verify_hofmeister(&g, &t()).unwrap();
        assert_eq!(r.equality_case, Some(false));
        assert_eq!(r.equality_structural, Some(false));
    }

    #[test]
    fn hofmeister_ignores_isolated() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = verify_hofmeister(&g, &t()).unwrap();
        assert_eq!(r.equality_case, Some(true));
        assert_eq!(r.details["isolated_removed"], json!(2));
    }

    #[test]
    fn degree_square_examples() {
        let r = verify_degree_square_bound(&build(Construction::Star(7)), &t()).unwrap();
        assert_eq!(r.slack, 0.0);
        assert_eq!(r.equality_case, Some(true));
        assert_eq!(r.equality_structural, Some(true));
        let r = verify_degree_square_bound(&build(Construction::Cycle(4)), &t()).unwrap();
        assert_eq!(r.slack, 4.0);
        assert_eq!(r.equality_case, Some(false));
        assert!(verify_degree_square_bound(&Graph::empty(3).unwrap(), &t()).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let r = verify_bipartite_bound(&build(Construction::CompleteBipartite(3, 3)), &t()).unwrap();
        assert!(r.pass && r.equality_case == Some(true) && r.equality_structural == Some(true));
        let r = verify_bipartite_bound(&build(Construction::Cycle(6)), &t()).unwrap();
        assert!((r.slack - (6f64.sqrt() - 2.0)).abs() < 1e-10);
        assert_eq!(r.equality_case, Some(false));
        let r = verify_bipartite_bound(&build(Construction::Cycle(4)), &t()).unwrap();
        assert_eq!(r.equality_case, Some(true));
        assert!(matches!(
            verify_bipartite_bound(&build(Construction::Cycle(5)), &t()),
            Err(VerifyError::Domain(_))
        ));
    }

    #[test]
    fn c4_existence_examples() {
        let r = verify_c4_existence(&build(Construction::Star(12)), &t()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["disjunct"], json!("star_exemption"));
        let r = verify_c4_existence(&build(Construction::Complete(5)), &t()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["disjunct"], json!("contains_c4"));
        assert!(matches!(
            verify_c4_existence(&build(Construction::Cycle(9)), &t()),
            Err(VerifyError::OutOfHypothesis(_))
        ));
    }

    #[test]
    fn fm_bound_examples() {
        let rs = verify_fm_bounds(&build(Construction::CliquePlusPendants(16)), SpectralMode::Nonstrict, &t()).unwrap();
        let upper = rs.iter().find(|r| r.claim == ClaimId::FmUpperCliquePendants).unwrap();
        assert!(upper.pass);
        assert_eq!(upper.details["value"], json!("15/1"));
        let rs = verify_fm_bounds(&build(Construction::Complete(5)), SpectralMode::Nonstrict, &t()).unwrap();
        assert_eq!(rs.len(), 2);
        assert!(rs.iter().all(|r| r.pass));
        assert!(rs[0].out_of_hypothesis.is_some() && rs[1].out_of_hypothesis.is_some());
        let rs = verify_fm_bounds(&build(Construction::CliquePlusPendants(100)), SpectralMode::Strict, &t()).unwrap();
        assert_eq!(rs[2].details["c4_count"], json!(990));
        assert!(rs[2].pass);
        assert!(matches!(
            verify_fm_bounds(&build(Construction::Cycle(6)), SpectralMode::Nonstrict, &t()),
            Err(VerifyError::Domain(_))
        ));
        assert!(matches!(
            verify_fm_bounds(&build(Construction::Star(5)), SpectralMode::Nonstrict, &t()),
            Err(VerifyError::OutOfHypothesis(_))
        ));
    }

    #[test]
    fn clique_pendants_recognition() {
        for m in [4, 9, 16, 25, 36] {
            let g = build(Construction::CliquePlusPendants(m));
            assert!(is_clique_plus_pendants(&g), "m = {m}");
            let n = g.n();
            let perm: Vec<usize> = (0..n).rev().collect();
            assert!(is_clique_plus_pendants(&g.permuted(&perm).unwrap()));
        }
        assert!(!is_clique_plus_pendants(&build(Construction::Complete(5))));
        assert!(!is_clique_plus_pendants(&build(Construction::CompleteBipartite(4, 4))));
        assert_eq!(clique_pendants_value(100), Some(Ratio::from_integer(990)));
        assert_eq!(clique_pendants_value(10), None);
    }

    #[test]
    fn dense_n4_examples() {
        let r = verify_dense_n4(&build(Construction::Complete(5)), &t()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["bound"], json!("5/256"));
        let r = verify_dense_n4(&build(Construction::Complete(10)), &t()).unwrap();
        assert_eq!(r.details["c4_count"], json!(630));
        assert!((r.slack - (630.0 - 0.3125)).abs() < 1e-12);
        assert!(matches!(
            verify_dense_n4(&build(Construction::Cycle(4)), &t()),
            Err(VerifyError::OutOfHypothesis(_))
        ));
    }

    #[test]
    fn interlacing_deletions_pass() {
        let r = verify_interlacing_deletions(&build(Construction::Petersen), &t()).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["subsets"], json!(10));
    }
}
