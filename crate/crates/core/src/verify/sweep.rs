//! Runs verifiers over whole graph universes and tallies the outcomes.

use super::enumerate::{enumerate_up_to, EnumerateError};
use super::{verify_claim, verify_fm_bounds, ClaimId, VerifyError, VerifyReport};
use crate::graph::Graph;
use crate::par;
use crate::tolerance::{SpectralMode, Tolerances};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub pass: usize,
    pub fail: usize,
    /// Hypothesis unmet or unreachable; neither pass nor fail.
    pub out_of_hypothesis: usize,
    /// Out-of-hypothesis reports whose inequality nonetheless held, or not.
    pub informational_pass: usize,
    pub informational_fail: usize,
    /// The claim does not apply (e.g. bipartite bound on a non-bipartite graph).
    pub not_applicable: usize,
    /// Numerical failures inside a verifier.
    pub errors: usize,
    pub equality_numeric: usize,
    pub equality_structural: usize,
    pub equality_mismatch: usize,
}

/// One graph singled out by a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCase {
    pub claim: ClaimId,
    pub graph6: String,
    pub slack: Option<f64>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub universe: String,
    pub mode: SpectralMode,
    pub graphs: usize,
    /// Number of graphs of each order.
    pub per_order: BTreeMap<usize, usize>,
    pub tallies: BTreeMap<ClaimId, ClaimTally>,
    /// Failures and verifier errors, sorted by claim then graph6.
    pub failures: Vec<SweepCase>,
    pub equality_mismatches: Vec<SweepCase>,
    /// graph6 strings of the numeric equality cases, per claim.
    pub equality_cases: BTreeMap<ClaimId, Vec<String>>,
}

impl SweepSummary {
    pub fn zero_failures(&self) -> bool {
        self.failures.is_empty() && self.equality_mismatches.is_empty()
    }
}

enum Outcome {
    Report(VerifyReport),
    Skipped(VerifyError),
}

fn evaluate(g: &Graph, claims: &[ClaimId], mode: SpectralMode, tol: &Tolerances) -> Vec<(ClaimId, Outcome)> {
    let mut fm: Option<Result<Vec<VerifyReport>, VerifyError>> = None;
    claims
        .iter()
        .map(|&claim| {
            let result = if claim.is_fm() {
                let all = fm.get_or_insert_with(|| verify_fm_bounds(g, mode, tol));
                match all {
                    Ok(rs) => rs
                        .iter()
                        .find(|r| r.claim == claim)
                        .cloned()
                        .ok_or_else(|| VerifyError::Domain("not a clique-plus-pendants graph".into())),
                    Err(e) => Err(e.clone()),
                }
            } else {
                verify_claim(g, claim, mode, tol)
            };
            (
                claim,
                match result {
                    Ok(r) => Outcome::Report(r),
                    Err(e) => Outcome::Skipped(e),
                },
            )
        })
        .collect()
}

/// Applies `claims` to every graph in `graphs`.
pub fn sweep_graphs(
    graphs: &[Graph],
    universe: &str,
    claims: &[ClaimId],
    mode: SpectralMode,
    tol: &Tolerances,
) -> SweepSummary {
    let mut claims = claims.to_vec();
    claims.sort_unstable();
    claims.dedup();
    let outcomes = par::map(graphs, |g| evaluate(g, &claims, mode, tol));

    let mut per_order = BTreeMap::new();
    let mut tallies: BTreeMap<ClaimId, ClaimTally> = claims.iter().map(|&c| (c, ClaimTally::default())).collect();
    let mut failures = Vec::new();
    let mut equality_mismatches = Vec::new();
    let mut equality_cases: BTreeMap<ClaimId, Vec<String>> = BTreeMap::new();
    for (g, per_claim) in graphs.iter().zip(outcomes) {
        *per_order.entry(g.n()).or_insert(0) += 1;
        for (claim, outcome) in per_claim {
            let tally = tallies.get_mut(&claim).expect("claim registered");
            match outcome {
                Outcome::Skipped(VerifyError::OutOfHypothesis(_)) => tally.out_of_hypothesis += 1,
                Outcome::Skipped(VerifyError::Domain(_)) => tally.not_applicable += 1,
                Outcome::Skipped(e) => {
                    tally.errors += 1;
                    failures.push(SweepCase {
                        claim,
                        graph6: g.to_graph6(),
                        slack: None,
                        message: e.to_string(),
                    });
                }
                Outcome::Report(r) => {
                    if r.out_of_hypothesis.is_some() {
                        tally.out_of_hypothesis += 1;
                        if r.pass {
                            tally.informational_pass += 1;
                        } else {
                            tally.informational_fail += 1;
                        }
                    } else if r.pass {
                        tally.pass += 1;
                    } else {
                        tally.fail += 1;
                        failures.push(SweepCase {
                            claim,
                            graph6: g.to_graph6(),
                            slack: Some(r.slack),
                            message: "inequality violated".into(),
                        });
                    }
                    if r.equality_case == Some(true) {
                        tally.equality_numeric += 1;
                        equality_cases.entry(claim).or_default().push(g.to_graph6());
                    }
                    if r.equality_structural == Some(true) {
                        tally.equality_structural += 1;
                    }
                    if r.equality_mismatch() {
                        tally.equality_mismatch += 1;
                        equality_mismatches.push(SweepCase {
                            claim,
                            graph6: g.to_graph6(),
                            slack: Some(r.slack),
                            message: format!(
                                "numeric equality {:?}, structural {:?}",
                                r.equality_case, r.equality_structural
                            ),
                        });
                    }
                }
            }
        }
    }
    let key = |c: &SweepCase| (c.claim, c.graph6.clone());
    failures.sort_by_key(key);
    equality_mismatches.sort_by_key(key);
    for list in equality_cases.values_mut() {
        list.sort_unstable();
    }
    SweepSummary {
        universe: universe.to_owned(),
        mode,
        graphs: graphs.len(),
        per_order,
        tallies,
        failures,
        equality_mismatches,
        equality_cases,
    }
}

/// Every isomorphism class on `1..=n_max` vertices from the built-in enumerator.
pub fn sweep_small_graphs(
    n_max: usize,
    claims: &[ClaimId],
    mode: SpectralMode,
    tol: &Tolerances,
) -> Result<SweepSummary, EnumerateError> {
    let graphs = enumerate_up_to(n_max)?;
    let universe = format!("all isomorphism classes on 1..={n_max} vertices");
    Ok(sweep_graphs(&graphs, &universe, claims, mode, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_vertex_sweep_is_clean() {
        let s = sweep_small_graphs(6, &ClaimId::ALL, SpectralMode::Nonstrict, &Tolerances::default()).unwrap();
        assert_eq!(s.per_order[&6], 156);
        assert_eq!(s.graphs, 1 + 2 + 4 + 11 + 34 + 156);
        assert!(s.failures.is_empty(), "{:?}", s.failures);
        // The triangle attains M = m² + m without being a star.
        let odd: Vec<&str> = s.equality_mismatches.iter().map(|c| c.graph6.as_str()).collect();
        assert_eq!(odd, vec!["Bw", "Cw", "Dw?", "Ew??"]);
        assert!(s.equality_mismatches.iter().all(|c| c.claim == ClaimId::DegreeSquareBound));
    }

    #[test]
    fn four_vertex_hofmeister_equality() {
        let s = sweep_small_graphs(4, &[ClaimId::Hofmeister], SpectralMode::Nonstrict, &Tolerances::default()).unwrap();
        // On four vertices: K2, 2K2, P3, K3, K_{1,3}, C4 and K4, padded with isolated vertices.
        let mut edges: Vec<usize> = s.equality_cases[&ClaimId::Hofmeister]
            .iter()
            .map(|g6| Graph::from_graph6(g6).unwrap())
            .filter(|g| g.n() == 4)
            .map(|g| g.m())
            .collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![1, 2, 2, 3, 3, 4, 6]);
        let t = &s.tallies[&ClaimId::Hofmeister];
        assert_eq!(t.equality_numeric, t.equality_structural);
        assert_eq!(t.equality_mismatch, 0);
    }
}
