//! Isomorphism-class enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from the class representatives on
//! `n − 1` vertices by attaching a new vertex to every neighbor subset. Each
//! candidate is reduced to a canonical code: vertices are partitioned by an
//! isomorphism-invariant key (degree, then the sorted degrees of the
//! neighbors) and the code is the least column-major upper-triangle bit
//! string over all orderings that respect the partition.

use crate::graph::{Graph, GraphBuilder};
use crate::par;
use thiserror::Error;

/// Largest order the built-in enumerator handles.
pub const BUILTIN_MAX_N: usize = 8;

/// Number of unlabeled graphs on `n` vertices, `n = 0..=8`.
pub const GRAPH_COUNTS: [usize; BUILTIN_MAX_N + 1] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("built-in enumeration supports n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("enumerated {found} classes on {n} vertices, expected {expected}")]
    CountMismatch { n: usize, found: usize, expected: usize },
}

#[derive(Clone, Copy)]
struct Small {
    n: usize,
    rows: [u8; BUILTIN_MAX_N],
}

impl Small {
    fn from_code(n: usize, code: u64) -> Small {
        let total = n * n.saturating_sub(1) / 2;
        let mut rows = [0u8; BUILTIN_MAX_N];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Small { n, rows }
    }

    fn to_graph(self) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("small order");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.rows[u] >> v & 1 == 1 {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build()
    }
}

struct Canon<'a> {
    g: &'a Small,
    /// Class index of each vertex; positions are filled class by class.
    class_of: [usize; BUILTIN_MAX_N],
    /// Class required at each position.
    slot_class: [usize; BUILTIN_MAX_N],
    order: [usize; BUILTIN_MAX_N],
    used: u8,
    best: u64,
    total: usize,
}

impl Canon<'_> {
    fn search(&mut self, pos: usize, code: u64) {
        let n = self.g.n;
        if pos == n {
            if code < self.best {
                self.best = code;
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.class_of[v] != self.slot_class[pos] {
                continue;
            }
            let mut column = 0u64;
            for i in 0..pos {
                column = (column << 1) | (self.g.rows[self.order[i]] >> v & 1) as u64;
            }
            let next = (code << pos) | column;
            let len = pos * (pos + 1) / 2;
            if self.best != u64::MAX && next > self.best >> (self.total - len) {
                continue;
            }
            self.order[pos] = v;
            self.used |= 1 << v;
            self.search(pos + 1, next);
            self.used &= !(1 << v);
        }
    }
}

fn canonical_code(g: &Small) -> u64 {
    let n = g.n;
    let deg: Vec<u32> = (0..n).map(|v| g.rows[v].count_ones()).collect();
    let keys: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| g.rows[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (deg[v], nd)
        })
        .collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let mut class_of = [0usize; BUILTIN_MAX_N];
    for v in 0..n {
        class_of[v] = distinct.binary_search_by(|k| keys[v].cmp(k)).expect("key present");
    }
    let mut slot_class = [0usize; BUILTIN_MAX_N];
    let mut sorted_classes: Vec<usize> = class_of[..n].to_vec();
    sorted_classes.sort_unstable();
    slot_class[..n].copy_from_slice(&sorted_classes);
    let mut canon = Canon {
        g,
        class_of,
        slot_class,
        order: [0; BUILTIN_MAX_N],
        used: 0,
        best: u64::MAX,
        total: n * n.saturating_sub(1) / 2,
    };
    canon.search(0, 0);
    if n <= 1 {
        0
    } else {
        canon.best
    }
}

fn codes_for(n: usize) -> Vec<u64> {
    if n <= 1 {
        return vec![0];
    }
    let parents = codes_for(n - 1);
    let candidates: Vec<(u64, u8)> = parents
        .iter()
        .flat_map(|&p| (0..1u16 << (n - 1)).map(move |s| (p, s as u8)))
        .collect();
    let mut codes = par::map(&candidates, |&(parent, subset)| {
        let mut g = Small::from_code(n - 1, parent);
        g.n = n;
        g.rows[n - 1] = subset;
        for i in 0..n - 1 {
            if subset >> i & 1 == 1 {
                g.rows[i] |= 1 << (n - 1);
            }
        }
        canonical_code(&g)
    });
    codes.sort_unstable();
    codes.dedup();
    codes
}

/// One representative per isomorphism class on exactly `n` vertices, in a
/// fixed order; the class count is checked against the known sequence.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > BUILTIN_MAX_N {
        return Err(EnumerateError::TooLarge { n, max: BUILTIN_MAX_N });
    }
    let codes = codes_for(n);
    if codes.len() != GRAPH_COUNTS[n] {
        return Err(EnumerateError::CountMismatch {
            n,
            found: codes.len(),
            expected: GRAPH_COUNTS[n],
        });
    }
    Ok(codes.into_iter().map(|c| Small::from_code(n, c).to_graph()).collect())
}

/// Representatives on every order `1..=n_max`.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_graphs(n)?);
    }
    Ok(all)
}

/// Canonical code of a graph on at most eight vertices.
pub fn canonical_form(g: &Graph) -> Option<u64> {
    if g.n() > BUILTIN_MAX_N {
        return None;
    }
    let mut rows = [0u8; BUILTIN_MAX_N];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Some(canonical_code(&Small { n: g.n(), rows }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Construction;

    #[test]
    fn counts_match_known_sequence_through_six() {
        for (n, &expected) in GRAPH_COUNTS.iter().enumerate().take(7) {
            assert_eq!(enumerate_graphs(n).unwrap().len(), expected);
        }
    }

    #[test]
    fn four_vertex_classes() {
        let gs = enumerate_graphs(4).unwrap();
        let mut edge_counts: Vec<usize> = gs.iter().map(|g| g.m()).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Construction::Book(3).build().unwrap();
        let h = g.permuted(&[4, 2, 0, 3, 1]).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let c5 = Construction::Cycle(5).build().unwrap();
        assert_ne!(canonical_form(&g), canonical_form(&c5));
    }

    #[test]
    fn too_large_rejected() {
        assert!(matches!(enumerate_graphs(9), Err(EnumerateError::TooLarge { .. })));
    }
}
