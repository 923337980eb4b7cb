//! Shared instance builders for the benchmark suite.

use quasiramsey::discrepancy::SetSystem;
use quasiramsey::graph::{sample_gnp, Graph, VertexSet};

pub fn dense_graph(n: usize, seed: u64) -> Graph {
    quasiramsey::graph::complement(&sample_gnp(n, 0.2, seed).expect("valid parameters"))
}

pub fn balanced_graph(n: usize, seed: u64) -> Graph {
    sample_gnp(n, 0.5, seed).expect("valid parameters")
}

pub fn square_system(l: usize, seed: u64) -> SetSystem {
    let mut rng = quasiramsey::rng::chacha(seed, 0);
    let sets: Vec<VertexSet> = (0..l).map(|_| VertexSet::random_half(l, &mut rng)).collect();
    SetSystem::new(l, sets).expect("ground matches")
}
