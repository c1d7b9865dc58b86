#![allow(clippy::needless_range_loop)]

#![allow(dead_code)]

use proptest::prelude::*;
use quadsat::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Edge list of a random graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

pub fn arb_bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(a, b)| (Just(a), Just(b), proptest::collection::vec(any::<bool>(), a * b)))
        .prop_map(|(a, b, bits)| {
            let edges: Vec<(usize, usize)> = (0..a * b).filter(|&k| bits[k]).map(|k| (k / b, a + k % b)).collect();
            Graph::from_edges(a + b, &edges).unwrap()
        })
}

/// Dense 0/1 matrix built straight from the edge iterator.
pub fn dense(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut a = vec![vec![0i64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    a
}

/// Ordered 4-tuples of distinct vertices forming a closed walk, divided by
/// the 8 rotations and reflections of a 4-cycle.
pub fn c4_bruteforce(g: &Graph) -> u64 {
    let a = dense(g);
    let n = g.n();
    let mut count = 0u64;
    for p in 0..n {
        for q in 0..n {
            if q == p || a[p][q] == 0 {
                continue;
            }
            for r in 0..n {
                if r == p || r == q || a[q][r] == 0 {
                    continue;
                }
                for s in 0..n {
                    if s == p || s == q || s == r {
                        continue;
                    }
                    count += (a[r][s] * a[s][p]) as u64;
                }
            }
        }
    }
    count / 8
}

/// `tr A⁴` by integer matrix products.
pub fn trace_a4(g: &Graph) -> i64 {
    let a = dense(g);
    let n = g.n();
    let mut a2 = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a2[i][j] = (0..n).map(|k| a[i][k] * a[k][j]).sum();
        }
    }
    (0..n).map(|i| (0..n).map(|k| a2[i][k] * a2[k][i]).sum::<i64>()).sum()
}
