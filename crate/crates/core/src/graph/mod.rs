//! Simple undirected graphs over dense adjacency bit rows.
//!
//! A [`Graph`] is an immutable value: every edit returns a new graph. Rows are
//! `ceil(n / 64)` words wide and the edge count is cached, so codegree queries
//! reduce to a word-wise `AND` followed by a population count.

mod construct;
mod edgelist;
mod graph6;

pub use construct::Construction;
pub(crate) use construct::exact_sqrt;
pub use edgelist::ParsedEdgeList;

use serde::{Serialize, Serializer};
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

/// Default upper bound on the vertex count of the bitset representation.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{n} vertices exceeds the vertex cap of {cap}")]
    VertexCap { n: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex} rejected: graphs are simple")]
    Loop { vertex: usize },
    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("{u}{v} is already an edge")]
    EdgeExists { u: usize, v: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 byte offset {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("invalid construction: {0}")]
    Construction(String),
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mutable accumulator used to assemble a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        Self::with_cap(n, DEFAULT_MAX_VERTICES)
    }

    /// Like [`GraphBuilder::new`] with an explicit vertex cap.
    pub fn with_cap(n: usize, cap: usize) -> Result<Self, GraphError> {
        if n > cap {
            return Err(GraphError::VertexCap { n, cap });
        }
        let words = words_for(n);
        Ok(Self {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    /// Inserts `uv`; returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        let (ui, ub) = (u * self.words + v / 64, 1u64 << (v % 64));
        if self.rows[ui] & ub != 0 {
            return Ok(false);
        }
        self.rows[ui] |= ub;
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
        self.m += 1;
        Ok(true)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            rows: self.rows,
            m: self.m,
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

/// Exact integer degree statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// Sum of squared degrees.
    pub degree_square_sum: u64,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Adjacency mask of `u`, `ceil(n/64)` words, bit `v % 64` of word `v / 64`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|N(u) ∩ N(v)|`; for `u == v` this is the degree.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, u: usize) -> Neighbors<'_> {
        Neighbors::new(self.row(u))
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        let degree_square_sum = degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
        DegreeStats {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
            degree_square_sum,
        }
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u >= self.n {
            Err(GraphError::VertexRange { vertex: u, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Returns `self - uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.rows[u * g.words + v / 64] &= !(1u64 << (v % 64));
        g.rows[v * g.words + u / 64] &= !(1u64 << (u % 64));
        g.m -= 1;
        Ok(g)
    }

    /// Returns `self + uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists { u, v });
        }
        let mut g = self.clone();
        g.rows[u * g.words + v / 64] |= 1u64 << (v % 64);
        g.rows[v * g.words + u / 64] |= 1u64 << (u % 64);
        g.m += 1;
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut b = GraphBuilder::new(vertices.len())?;
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &c) in vertices.iter().enumerate().skip(i + 1) {
                if a == c {
                    return Err(GraphError::Loop { vertex: a });
                }
                if self.has_edge(a, c) {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok(b.build())
    }

    /// Drops degree-0 vertices, keeping the relative order of the rest.
    pub fn remove_isolated(&self) -> (Graph, usize) {
        let (g, kept) = self.remove_isolated_with_map();
        (g, self.n - kept.len())
    }

    /// As [`Graph::remove_isolated`], also returning the old label of each new vertex.
    pub fn remove_isolated_with_map(&self) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&u| self.degree(u) > 0).collect();
        if kept.len() == self.n {
            return (self.clone(), kept);
        }
        let g = self.induced(&kept).expect("kept vertices are distinct and in range");
        (g, kept)
    }

    /// Relabels vertex `perm[i]` as `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::Construction(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::Construction(format!("vertex {p} repeated in permutation")));
            }
        }
        self.induced(perm)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    /// Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Proper 2-coloring (`0`/`1` per vertex, the smallest vertex of each
    /// component colored `0`), or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `K_{1,k}` for some `k >= 1`, plus any number of isolated vertices.
    pub fn is_star_with_isolated(&self) -> bool {
        if self.m == 0 {
            return false;
        }
        // A vertex of degree m touches every edge.
        (0..self.n).any(|u| self.degree(u) == self.m)
    }

    /// Complete bipartite after removing isolated vertices (at least one edge).
    pub fn is_complete_bipartite_with_isolated(&self) -> bool {
        if self.m == 0 {
            return false;
        }
        let (core, _) = self.remove_isolated();
        if core.components().len() != 1 {
            return false;
        }
        match core.bipartition() {
            Some(color) => {
                let a = color.iter().filter(|&&c| c == 0).count();
                a * (core.n - a) == core.m
            }
            None => false,
        }
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Literal symmetry/zero-diagonal/edge-count check used by tests.
    pub fn check_invariants(&self) -> bool {
        let mut pop = 0usize;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.neighbors(u) {
                if v >= self.n || !self.has_edge(v, u) {
                    return false;
                }
                pop += 1;
            }
        }
        pop == 2 * self.m
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        graph6::decode(text.as_bytes())
    }

    pub fn from_graph6_bytes(bytes: &[u8]) -> Result<Graph, GraphError> {
        graph6::decode(bytes)
    }

    pub fn to_edge_list(&self) -> String {
        edgelist::write(self)
    }

    pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList, GraphError> {
        edgelist::parse(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Graphs serialize as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl<'a> Neighbors<'a> {
    fn new(row: &'a [u64]) -> Self {
        Self {
            row,
            word: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn degree_stats_small() {
        let star = Construction::Star(3).build().unwrap();
        let s = star.degree_stats();
        assert_eq!(s.degrees, vec![3, 1, 1, 1]);
        assert_eq!(s.degree_square_sum, 12);
        let s = c4().degree_stats();
        assert_eq!(s.degrees, vec![2; 4]);
        assert_eq!(s.degree_square_sum, 16);
        let p = Construction::Petersen.build().unwrap().degree_stats();
        assert_eq!((p.degree_square_sum, p.min_degree, p.max_degree), (90, 3, 3));
    }

    #[test]
    fn delete_edge_examples() {
        let p4 = c4().delete_edge(0, 1).unwrap();
        assert_eq!(p4.m(), 3);
        assert_eq!(p4.degrees(), vec![1, 1, 2, 2]);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let e = k2.delete_edge(1, 0).unwrap();
        assert_eq!((e.n(), e.m()), (2, 0));
        let k4 = Construction::Complete(4).build().unwrap();
        assert_eq!(k4.delete_edge(0, 1).unwrap().m(), 5);
        assert_eq!(k4.m(), 6);
        assert_eq!(e.delete_edge(0, 1), Err(GraphError::NotAnEdge { u: 0, v: 1 }));
    }

    #[test]
    fn delete_then_add_restores() {
        let k4 = Construction::Complete(4).build().unwrap();
        let back = k4.delete_edge(1, 3).unwrap().add_edge(3, 1).unwrap();
        assert_eq!(back, k4);
        assert!(matches!(k4.add_edge(0, 1), Err(GraphError::EdgeExists { .. })));
        assert!(matches!(k4.add_edge(2, 2), Err(GraphError::Loop { vertex: 2 })));
    }

    #[test]
    fn remove_isolated_examples() {
        let g = Graph::from_edges(6, &[(1, 0), (1, 3), (1, 5)]).unwrap();
        let (core, removed) = g.remove_isolated();
        assert_eq!(removed, 2);
        assert_eq!(core, Construction::Star(3).build().unwrap().permuted(&[1, 0, 2, 3]).unwrap());
        assert_eq!(core.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (1, 3)]);
        let (e, removed) = Graph::empty(5).unwrap().remove_isolated();
        assert_eq!((e.n(), removed), (0, 5));
        assert_eq!(c4().remove_isolated(), (c4(), 0));
    }

    #[test]
    fn star_detection() {
        let mut edges: Vec<_> = (1..=10).map(|v| (0, v)).collect();
        edges.push((0, 11));
        edges.pop();
        let g = Graph::from_edges(14, &edges).unwrap();
        assert!(g.is_star_with_isolated());
        assert!(!c4().is_star_with_isolated());
        assert!(Graph::from_edges(2, &[(0, 1)]).unwrap().is_star_with_isolated());
        assert!(!Graph::empty(3).unwrap().is_star_with_isolated());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_star_with_isolated());
        let triangle = Construction::Complete(3).build().unwrap();
        assert!(!triangle.is_star_with_isolated());
    }

    #[test]
    fn complete_bipartite_detection() {
        assert!(c4().is_complete_bipartite_with_isolated());
        let k23 = Construction::CompleteBipartite(2, 3).build().unwrap();
        assert!(k23.is_complete_bipartite_with_isolated());
        assert!(!Construction::Cycle(6).build().unwrap().is_complete_bipartite_with_isolated());
        let two_k2 = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_complete_bipartite_with_isolated());
    }

    #[test]
    fn vertex_cap_enforced() {
        assert!(matches!(Graph::empty(DEFAULT_MAX_VERTICES + 1), Err(GraphError::VertexCap { .. })));
        assert!(GraphBuilder::with_cap(10, 8).is_err());
        assert!(GraphBuilder::with_cap(5000, 8192).is_ok());
    }

    #[test]
    fn wide_rows_work() {
        let g = Construction::Cycle(130).build().unwrap();
        assert!(g.check_invariants());
        assert_eq!(g.codegree(63, 65), 1);
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.components().len(), 1);
    }
}
