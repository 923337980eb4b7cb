//! Constructive quasi-Ramsey toolkit.
//!
//! Given a graph `G` and a target order `k`, the [`pipeline`] module searches
//! `G` and its complement for an induced subgraph on exactly `k` vertices
//! whose minimum degree clears `(k-1)/2` (or a slightly higher threshold),
//! and emits a [`pipeline::Certificate`] whose claim is always re-verified
//! against the input graph. The supporting machinery is exposed directly:
//!
//! * [`graph`] — bitset graphs, vertex sets, exact half-integer graph
//!   discrepancy `D(X)`, skew discrepancy, seeded G(n,p) sampling;
//! * [`graph6`] — parser/emitter for the standard graph6 text format;
//! * [`discrepancy`] — set-system discrepancy: exact and randomized coloring
//!   backends, linear-discrepancy rounding, proportional selection, and
//!   exact max-subset graph discrepancy measurement;
//! * [`extraction`] — iterated removal of maximum-skew-discrepancy sets and
//!   the variable-order high-min-degree subgraph search built on it;
//! * [`bisect`] — the greedy swap split and the halving binary search;
//! * [`thinning`] — shrinking a dense graph to exactly `k` vertices via
//!   proportional selection over closed neighbourhood sets;
//! * [`oracle`] — exhaustive ground truth: best min-degree `k`-subsets,
//!   the fixed quasi-Ramsey predicate, and exact `R*_c(k)` for tiny `n`;
//! * [`pipeline`] — the end-to-end orchestration plus certificate
//!   verification.
//!
//! All randomness flows through ChaCha8 keyed by caller-provided 64-bit
//! seeds (see [`rng`]), so every operation is reproducible bit-for-bit
//! across platforms and thread counts.

pub mod bisect;
pub mod discrepancy;
pub mod extraction;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod pipeline;
pub mod rng;
pub mod threshold;
pub mod thinning;

mod half;

pub use graph::{Graph, GraphError, GraphSide, VertexSet};
pub use half::HalfInt;

/// FNV-1a 64-bit hash. Used to fingerprint graph6 strings in certificates.
///
/// Offset basis `0xcbf29ce484222325`, prime `0x100000001b3`.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
