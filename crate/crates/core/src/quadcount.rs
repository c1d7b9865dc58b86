//! Quadrilateral (C4 subgraph) counts by four independent routes.
//!
//! * codegree: `½ Σ_{u<v} C(codeg(u,v), 2)`;
//! * closed walks: invert `tr A⁴ = 2m + 4 Σ_u C(d_u, 2) + 8·#C4`;
//! * enumeration: check the three 4-cycles on every 4-subset;
//! * spectral: `⅛ Σ λ_i⁴ + m/4 − M/4`.
//!
//! The codegree count is the canonical one; the rest cross-check it.

use crate::graph::Graph;
use crate::par;
use crate::spectral::{full_spectrum, SpectralError};
use crate::tolerance::Tolerances;
use serde::Serialize;
use thiserror::Error;

/// Largest order accepted by [`count_c4_enumeration`].
pub const ENUMERATION_MAX_N: usize = 20;

/// Relative agreement required of the spectral count.
pub const SPECTRAL_AGREEMENT: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CountError {
    #[error("enumeration is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("closed-walk identity left a remainder: tr A^4 = {trace}, 2m = {two_m}, 4ΣC(d,2) = {paths}")]
    Inconsistent { trace: u128, two_m: u128, paths: u128 },
    #[error("count overflowed the integer range")]
    Overflow,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[inline]
fn choose2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

/// Number of C4 subgraphs via pairwise codegrees.
pub fn count_c4_codegree(g: &Graph) -> u64 {
    let n = g.n();
    let twice = par::sum_range_u128(n, |u| {
        (u + 1..n).map(|v| choose2(g.codegree(u, v) as u128)).sum()
    });
    debug_assert_eq!(twice % 2, 0);
    u64::try_from(twice / 2).expect("C4 count fits in u64 for n <= 4096")
}

/// `tr A⁴ = Σ_{u,v} codeg(u,v)²` with `codeg(u,u) = d_u`, in exact arithmetic.
pub fn closed_walks_4(g: &Graph) -> u128 {
    let n = g.n();
    par::sum_range_u128(n, |u| {
        let d = g.degree(u) as u128;
        let off: u128 = (u + 1..n)
            .map(|v| {
                let c = g.codegree(u, v) as u128;
                c * c
            })
            .sum();
        d * d + 2 * off
    })
}

/// `Σ_u C(d_u, 2)`, the number of paths on three vertices.
pub fn cherries(g: &Graph) -> u128 {
    (0..g.n()).map(|u| choose2(g.degree(u) as u128)).sum()
}

/// C4 count recovered from `tr A⁴`.
pub fn count_c4_walks(g: &Graph) -> Result<u64, CountError> {
    let trace = closed_walks_4(g);
    let two_m = 2 * g.m() as u128;
    let paths = 4 * cherries(g);
    let inconsistent = CountError::Inconsistent { trace, two_m, paths };
    let rest = trace
        .checked_sub(two_m + paths)
        .ok_or_else(|| inconsistent.clone())?;
    if rest % 8 != 0 {
        return Err(inconsistent);
    }
    u64::try_from(rest / 8).map_err(|_| CountError::Overflow)
}

/// Brute force over all 4-subsets, for `n <= 20`.
pub fn count_c4_enumeration(g: &Graph) -> Result<u64, CountError> {
    let n = g.n();
    if n > ENUMERATION_MAX_N {
        return Err(CountError::TooLarge {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    let e = |a, b| g.has_edge(a, b);
    let mut count = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // The three cyclic orders of {a, b, c, d}.
                    count += (e(a, b) && e(b, c) && e(c, d) && e(d, a)) as u64;
                    count += (e(a, b) && e(b, d) && e(d, c) && e(c, a)) as u64;
                    count += (e(a, c) && e(c, b) && e(b, d) && e(d, a)) as u64;
                }
            }
        }
    }
    Ok(count)
}

/// `⅛ Σλ⁴ + m/4 − M/4` from the dense spectrum.
pub fn count_c4_spectral(g: &Graph, tol: &Tolerances) -> Result<f64, CountError> {
    let spectrum = full_spectrum(g, tol)?;
    let m = g.m() as f64;
    let big_m = g.degree_stats().degree_square_sum as f64;
    Ok(spectrum.power_sum(4) / 8.0 + m / 4.0 - big_m / 4.0)
}

/// All applicable counts side by side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct C4Report {
    pub count_codegree: u64,
    pub count_walks: Option<u64>,
    pub count_enumeration: Option<u64>,
    pub count_spectral: Option<f64>,
    /// `tr A⁴`.
    pub closed_walks_4: u128,
    pub agreement: bool,
    /// Why `agreement` is false, one entry per failed check.
    pub disagreements: Vec<String>,
}

impl C4Report {
    /// The canonical `f(G)`.
    pub fn count(&self) -> u64 {
        self.count_codegree
    }
}

/// Runs every method that fits the graph and cross-checks them.
pub fn count_report(g: &Graph, tol: &Tolerances) -> C4Report {
    let codegree = count_c4_codegree(g);
    let trace = closed_walks_4(g);
    let mut disagreements = Vec::new();
    let walks = match count_c4_walks(g) {
        Ok(w) => {
            if w != codegree {
                disagreements.push(format!("walks {w} != codegree {codegree}"));
            }
            Some(w)
        }
        Err(e) => {
            disagreements.push(e.to_string());
            None
        }
    };
    let identity = 2 * g.m() as u128 + 4 * cherries(g) + 8 * codegree as u128;
    if identity != trace {
        disagreements.push(format!("tr A^4 = {trace} but 2m + 4ΣC(d,2) + 8f = {identity}"));
    }
    let enumeration = if g.n() <= ENUMERATION_MAX_N {
        let e = count_c4_enumeration(g).expect("size checked");
        if e != codegree {
            disagreements.push(format!("enumeration {e} != codegree {codegree}"));
        }
        Some(e)
    } else {
        None
    };
    let spectral = if g.n() <= tol.dense_max_n {
        match count_c4_spectral(g, tol) {
            Ok(s) => {
                let scale = (codegree as f64).max(1.0);
                if (s - codegree as f64).abs() > SPECTRAL_AGREEMENT * scale {
                    disagreements.push(format!("spectral {s} != codegree {codegree}"));
                }
                Some(s)
            }
            Err(e) => {
                disagreements.push(e.to_string());
                None
            }
        }
    } else {
        None
    };
    C4Report {
        count_codegree: codegree,
        count_walks: walks,
        count_enumeration: enumeration,
        count_spectral: spectral,
        closed_walks_4: trace,
        agreement: disagreements.is_empty(),
        disagreements,
    }
}
