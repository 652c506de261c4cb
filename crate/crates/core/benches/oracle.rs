use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hctree::exec::Execution;
use hctree::oracle::{brute_force_hc_with, enumerate_trees_with, random_tree, OracleBudget};
use hctree::tree::validate_tree;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn oracle(c: &mut Criterion) {
    let budget = OracleBudget::default();
    // a spider with uneven legs: no qualified order, so the search cannot stop at the bound
    let spider = validate_tree(
        10,
        &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7), (7, 8), (8, 9)],
    )
    .unwrap();
    let trees = [("spider10", spider), ("random10", random_tree(10, 7))];
    let mut group = c.benchmark_group("brute_force_hc");
    group.sample_size(10);
    for (name, tree) in &trees {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), tree, |b, t| {
                b.iter(|| brute_force_hc_with(black_box(t), &budget, exec).unwrap().value)
            });
        }
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_trees");
    group.sample_size(10);
    for n in [10, 12] {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, n), &n, |b, &n| {
                b.iter(|| enumerate_trees_with(black_box(n), exec).unwrap().len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, oracle, census);
criterion_main!(benches);
