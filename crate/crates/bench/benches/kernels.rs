use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quasiramsey::bisect::{greedy_swap_split, halving_search};
use quasiramsey::discrepancy::{disc_exact, select_proportional, ExactBackend};
use quasiramsey::extraction::{argmax_skew, ArgmaxMode};
use quasiramsey::graph6::{emit_graph6, parse_graph6};
use quasiramsey::oracle::best_min_degree_subset;
use quasiramsey::pipeline::{quasi_ramsey_extract, PipelineParams};
use quasiramsey::VertexSet;
use quasiramsey_bench::{balanced_graph, dense_graph, square_system};
use std::hint::black_box;

fn bench_graph6(c: &mut Criterion) {
    let g = balanced_graph(200, 1);
    let text = emit_graph6(&g);
    c.bench_function("graph6_emit_n200", |b| b.iter(|| emit_graph6(black_box(&g))));
    c.bench_function("graph6_parse_n200", |b| {
        b.iter(|| parse_graph6(black_box(&text)).unwrap())
    });
}

fn bench_disc_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("disc_exact");
    for l in [12usize, 16, 20] {
        let h = square_system(l, 7);
        group.bench_with_input(BenchmarkId::from_parameter(l), &h, |b, h| {
            b.iter(|| disc_exact(black_box(h), 22).unwrap())
        });
    }
    group.finish();
}

fn bench_select_proportional(c: &mut Criterion) {
    let h = square_system(18, 3);
    c.bench_function("select_proportional_l18", |b| {
        b.iter(|| select_proportional(black_box(&h), 0.4, &ExactBackend::default(), 20).unwrap())
    });
}

fn bench_argmax(c: &mut Criterion) {
    let g16 = balanced_graph(16, 5);
    c.bench_function("argmax_exact_n16", |b| {
        b.iter(|| argmax_skew(black_box(&g16), 0.5, ArgmaxMode::Exact, 0).unwrap())
    });
    let g60 = balanced_graph(60, 5);
    c.bench_function("argmax_heuristic_n60", |b| {
        b.iter(|| {
            argmax_skew(
                black_box(&g60),
                0.5,
                ArgmaxMode::Heuristic { starts: 16 },
                0,
            )
            .unwrap()
        })
    });
}

fn bench_split_and_halving(c: &mut Criterion) {
    let g = dense_graph(60, 9);
    let delta = g.min_degree().unwrap();
    let t = delta as f64 - 59.0 / 2.0;
    c.bench_function("greedy_swap_split_n60", |b| {
        b.iter(|| greedy_swap_split(black_box(&g), 30, 30, t, 0.5, None).unwrap())
    });
    let start = VertexSet::from_indices(60, 0..60).unwrap();
    c.bench_function("halving_search_n60_k5", |b| {
        b.iter(|| halving_search(black_box(&g), &start, 5, t / 2.0).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let g = balanced_graph(20, 11);
    c.bench_function("oracle_best_subset_n20_k8", |b| {
        b.iter(|| best_min_degree_subset(black_box(&g), 8).unwrap())
    });
}

fn bench_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(20);
    for (k, n) in [(4usize, 45usize), (6, 87)] {
        let g = balanced_graph(n, 13);
        let params = PipelineParams::default();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("k{k}_n{n}")),
            &g,
            |b, g| b.iter(|| quasi_ramsey_extract(black_box(g), k, &params).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_graph6,
    bench_disc_exact,
    bench_select_proportional,
    bench_argmax,
    bench_split_and_halving,
    bench_oracle,
    bench_pipeline
);
criterion_main!(benches);
