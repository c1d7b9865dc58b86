use super::{Graph, GraphBuilder, GraphError};
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// `K_{1,m}`, center 0.
    Star(usize),
    /// `K_{a,b}`, sides `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `K_s` with `s = sqrt(m) + 1`, plus `m - C(s,2)` pendant edges at vertex 0.
    CliquePlusPendants(usize),
    /// `K_{2,r}` plus the edge `01` between the two hubs.
    Book(usize),
    /// Join of `K_r` (vertices `0..r`) with `k` independent vertices.
    CliqueJoinIndependent(usize, usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Petersen,
}

/// Exact integer square root when `m` is a perfect square.
pub(crate) fn exact_sqrt(m: u64) -> Option<u64> {
    let r = (m as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c.checked_mul(c) == Some(m))
}

fn positive(name: &str, value: usize) -> Result<(), GraphError> {
    if value == 0 {
        Err(GraphError::Construction(format!("{name} must be a positive integer")))
    } else {
        Ok(())
    }
}

impl Construction {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Construction::Star(m) => {
                positive("star size", m)?;
                let mut b = GraphBuilder::new(m + 1)?;
                for leaf in 1..=m {
                    b.add_edge(0, leaf)?;
                }
                Ok(b.build())
            }
            Construction::CompleteBipartite(a, c) => {
                positive("side a", a)?;
                positive("side b", c)?;
                let mut b = GraphBuilder::new(a + c)?;
                for u in 0..a {
                    for v in a..a + c {
                        b.add_edge(u, v)?;
                    }
                }
                Ok(b.build())
            }
            Construction::CliquePlusPendants(m) => {
                positive("edge count", m)?;
                let root = exact_sqrt(m as u64).ok_or_else(|| {
                    GraphError::Construction(format!(
                        "clique_plus_pendants needs a perfect-square edge count; {m} is not one"
                    ))
                })? as usize;
                let s = root + 1;
                let clique_edges = s * (s - 1) / 2;
                if m < clique_edges {
                    return Err(GraphError::Construction(format!(
                        "m = {m} is smaller than C({s}, 2) = {clique_edges}"
                    )));
                }
                let pendants = m - clique_edges;
                let mut b = GraphBuilder::new(s + pendants)?;
                for u in 0..s {
                    for v in u + 1..s {
                        b.add_edge(u, v)?;
                    }
                }
                for p in s..s + pendants {
                    b.add_edge(0, p)?;
                }
                Ok(b.build())
            }
            Construction::Book(r) => {
                positive("page count", r)?;
                let mut b = GraphBuilder::new(r + 2)?;
                b.add_edge(0, 1)?;
                for page in 2..r + 2 {
                    b.add_edge(0, page)?;
                    b.add_edge(1, page)?;
                }
                Ok(b.build())
            }
            Construction::CliqueJoinIndependent(r, k) => {
                positive("clique size", r)?;
                positive("independent set size", k)?;
                let mut b = GraphBuilder::new(r + k)?;
                for u in 0..r {
                    for v in u + 1..r + k {
                        b.add_edge(u, v)?;
                    }
                }
                Ok(b.build())
            }
            Construction::Complete(s) => {
                positive("clique size", s)?;
                let mut b = GraphBuilder::new(s)?;
                for u in 0..s {
                    for v in u + 1..s {
                        b.add_edge(u, v)?;
                    }
                }
                Ok(b.build())
            }
            Construction::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::Construction(format!("cycle needs at least 3 vertices, got {n}")));
                }
                let mut b = GraphBuilder::new(n)?;
                for u in 0..n {
                    b.add_edge(u, (u + 1) % n)?;
                }
                Ok(b.build())
            }
            Construction::Path(n) => {
                positive("path order", n)?;
                let mut b = GraphBuilder::new(n)?;
                for u in 1..n {
                    b.add_edge(u - 1, u)?;
                }
                Ok(b.build())
            }
            Construction::Petersen => {
                let mut b = GraphBuilder::new(10)?;
                for i in 0..5 {
                    b.add_edge(i, (i + 1) % 5)?;
                    b.add_edge(i, i + 5)?;
                    b.add_edge(5 + i, 5 + (i + 2) % 5)?;
                }
                Ok(b.build())
            }
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Star(m) => write!(f, "star {m}"),
            Construction::CompleteBipartite(a, b) => write!(f, "complete_bipartite {a} {b}"),
            Construction::CliquePlusPendants(m) => write!(f, "clique_plus_pendants {m}"),
            Construction::Book(r) => write!(f, "book {r}"),
            Construction::CliqueJoinIndependent(r, k) => write!(f, "clique_join_independent {r} {k}"),
            Construction::Complete(s) => write!(f, "complete {s}"),
            Construction::Cycle(n) => write!(f, "cycle {n}"),
            Construction::Path(n) => write!(f, "path {n}"),
            Construction::Petersen => write!(f, "petersen"),
        }
    }
}

/// Serializes as its textual form, e.g. `"complete_bipartite 2 3"`.
impl Serialize for Construction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Construction {
    type Err = GraphError;

    /// Parses `family arg...`, e.g. `complete_bipartite 2 3`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let mut parts = s.split_whitespace();
        let family = parts.next().ok_or_else(|| GraphError::Construction("empty construction".into()))?;
        let args: Vec<usize> = parts
            .map(|p| {
                p.parse()
                    .map_err(|_| GraphError::Construction(format!("argument {p:?} is not a non-negative integer")))
            })
            .collect::<Result<_, _>>()?;
        let arity = |k: usize| -> Result<(), GraphError> {
            if args.len() == k {
                Ok(())
            } else {
                Err(GraphError::Construction(format!(
                    "{family} takes {k} argument(s), got {}",
                    args.len()
                )))
            }
        };
        Ok(match family {
            "star" => {
                arity(1)?;
                Construction::Star(args[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Construction::CompleteBipartite(args[0], args[1])
            }
            "clique_plus_pendants" => {
                arity(1)?;
                Construction::CliquePlusPendants(args[0])
            }
            "book" => {
                arity(1)?;
                Construction::Book(args[0])
            }
            "clique_join_independent" => {
                arity(2)?;
                Construction::CliqueJoinIndependent(args[0], args[1])
            }
            "complete" => {
                arity(1)?;
                Construction::Complete(args[0])
            }
            "cycle" => {
                arity(1)?;
                Construction::Cycle(args[0])
            }
            "path" => {
                arity(1)?;
                Construction::Path(args[0])
            }
            "petersen" => {
                arity(0)?;
                Construction::Petersen
            }
            other => return Err(GraphError::Construction(format!("unknown family {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_plus_pendants_16() {
        let g = Construction::CliquePlusPendants(16).build().unwrap();
        assert_eq!((g.n(), g.m()), (11, 16));
        assert_eq!(g.degree(0), 4 + 6);
        for p in 5..11 {
            assert_eq!(g.neighbors(p).collect::<Vec<_>>(), vec![0]);
        }
    }

    #[test]
    fn clique_plus_pendants_rejects_non_squares() {
        assert!(matches!(
            Construction::CliquePlusPendants(10).build(),
            Err(GraphError::Construction(_))
        ));
        assert!(Construction::CliquePlusPendants(0).build().is_err());
        let k2 = Construction::CliquePlusPendants(1).build().unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
    }

    #[test]
    fn named_sizes() {
        let k23 = Construction::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let b23 = Construction::CliqueJoinIndependent(2, 3).build().unwrap();
        assert_eq!((b23.n(), b23.m()), (5, 7));
        let book = Construction::Book(4).build().unwrap();
        assert_eq!((book.n(), book.m()), (6, 9));
        let p = Construction::Petersen.build().unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.is_regular());
        assert_eq!(Construction::Cycle(5).build().unwrap().m(), 5);
        assert_eq!(Construction::Path(4).build().unwrap().m(), 3);
        assert!(Construction::Cycle(2).build().is_err());
        assert!(Construction::Star(0).build().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for c in [
            Construction::Star(7),
            Construction::CompleteBipartite(2, 3),
            Construction::CliquePlusPendants(25),
            Construction::Book(3),
            Construction::CliqueJoinIndependent(2, 3),
            Construction::Complete(5),
            Construction::Cycle(6),
            Construction::Path(4),
            Construction::Petersen,
        ] {
            assert_eq!(c.to_string().parse::<Construction>().unwrap(), c);
        }
        assert!("star".parse::<Construction>().is_err());
        assert!("wheel 5".parse::<Construction>().is_err());
        assert!("star x".parse::<Construction>().is_err());
    }

    #[test]
    fn exact_sqrt_works() {
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(16), Some(4));
        assert_eq!(exact_sqrt(15), None);
        assert_eq!(exact_sqrt(1 << 62), Some(1 << 31));
    }
}
