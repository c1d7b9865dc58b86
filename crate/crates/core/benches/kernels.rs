use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quadsat::par;
use quadsat::quadcount::count_c4_codegree;
use quadsat::verify::{enumerate_graphs, sweep_small_graphs, ClaimId};
use quadsat::{Graph, SpectralMode, Tolerances};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
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

/// One worker against the default pool.
const WORKERS: [(&str, usize); 2] = [("sequential", 1), ("pool", 0)];

fn codegree(c: &mut Criterion) {
    let g = random_graph(600, 0.1, 1);
    let mut group = c.benchmark_group("c4_codegree_n600");
    for (name, workers) in WORKERS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::with_workers(workers, || count_c4_codegree(black_box(&g))))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let tol = Tolerances::default();
    let claims = [ClaimId::Hofmeister, ClaimId::C4Existence, ClaimId::FmLowerM32];
    let mut group = c.benchmark_group("sweep_n6");
    group.sample_size(10);
    for (name, workers) in WORKERS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::with_workers(workers, || sweep_small_graphs(6, &claims, SpectralMode::Nonstrict, &tol).unwrap()))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n7");
    group.sample_size(10);
    for (name, workers) in WORKERS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::with_workers(workers, || enumerate_graphs(black_box(7)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, codegree, sweep, enumeration);
criterion_main!(benches);
