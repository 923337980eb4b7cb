//! Greedy swap bisection and the halving search built on it.
//!
//! [`greedy_swap_split`] partitions a graph into sides of sizes `a` and `b`
//! and repeatedly swaps a pair of vertices that are light on their own sides
//! (degree below `a/2 - 1 + alpha*t`, resp. `b/2 - 1 + (1-alpha)*t`). While
//! the host satisfies `delta(G) >= (n-1)/2 + t`, each swap raises the edge
//! count inside side A by at least 1, so at most `C(a,2)` swaps can happen;
//! on exit at least one side's condition holds for every one of its
//! vertices. When the hypothesis fails the loop still terminates (a
//! non-increasing swap or the `C(a,2)` cap stops it) and the outcome is
//! flagged instead of certified.
//!
//! [`halving_search`] descends from a multiple-of-`k` vertex set to exactly
//! `k` vertices by splitting into the two nearest multiples of `k` at each
//! level with `alpha = 1/2` and surplus recursion `t' = (t - 1)/2`.

use crate::graph::{choose2, induced, Graph, VertexSet};
use crate::threshold::{degree_meets, degree_violates};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum BisectError {
    SizeMismatch { a: usize, b: usize, n: usize },
    InvalidAlpha { alpha: f64 },
    BadInitialSide { expected: usize, got: usize },
    NotMultipleOfK { len: usize, k: usize },
    TooSmall { len: usize, k: usize },
}

impl fmt::Display for BisectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BisectError::SizeMismatch { a, b, n } => {
                write!(f, "side sizes {a} + {b} do not sum to the graph order {n}")
            }
            BisectError::InvalidAlpha { alpha } => write!(f, "alpha {alpha} not in [0, 1]"),
            BisectError::BadInitialSide { expected, got } => {
                write!(f, "initial side has {got} vertices, expected {expected}")
            }
            BisectError::NotMultipleOfK { len, k } => {
                write!(f, "subset size {len} is not a multiple of k = {k}")
            }
            BisectError::TooSmall { len, k } => {
                write!(f, "subset size {len} is below k = {k}")
            }
        }
    }
}

impl std::error::Error for BisectError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SplitSide {
    A,
    B,
}

impl fmt::Display for SplitSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitSide::A => write!(f, "A"),
            SplitSide::B => write!(f, "B"),
        }
    }
}

/// Result of one greedy swap split.
#[derive(Clone, Debug)]
pub struct SplitOutcome {
    pub side: SplitSide,
    /// Vertices of the returned side.
    pub subset: VertexSet,
    pub swaps_performed: u64,
    /// The per-vertex degree threshold certified for the returned side.
    pub guarantee: f64,
    /// Whether `delta(G) >= (n-1)/2 + t` held on entry.
    pub hypothesis_met: bool,
    /// Whether every vertex of the returned side meets its threshold
    /// (recomputed on exit). Always true when the hypothesis held.
    pub condition_satisfied: bool,
    /// `e(G[A])` before the first swap and after each swap; strictly
    /// increasing while the hypothesis holds.
    pub potential_trace: Vec<u64>,
}

/// Splits `g` into sides of sizes `a` and `b`, swapping lexicographically
/// smallest violating pairs until one side is clean.
///
/// `init`, when given, seeds side A (must have exactly `a` vertices);
/// otherwise A starts as the first `a` vertices. Degenerate sizes are fine:
/// an empty side has no violating vertex and satisfies its condition
/// vacuously. Ties between sides prefer A.
pub fn greedy_swap_split(
    g: &Graph,
    a: usize,
    b: usize,
    t: f64,
    alpha: f64,
    init: Option<&VertexSet>,
) -> Result<SplitOutcome, BisectError> {
    let n = g.n();
    if a + b != n {
        return Err(BisectError::SizeMismatch { a, b, n });
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(BisectError::InvalidAlpha { alpha });
    }
    let mut side_a = match init {
        Some(s) => {
            if s.len() != a || s.capacity() != n {
                return Err(BisectError::BadInitialSide {
                    expected: a,
                    got: s.len(),
                });
            }
            s.clone()
        }
        None => VertexSet::from_indices(n, 0..a).expect("a <= n"),
    };

    let thr_a = a as f64 / 2.0 - 1.0 + alpha * t;
    let thr_b = b as f64 / 2.0 - 1.0 + (1.0 - alpha) * t;

    let hypothesis_met = match g.min_degree() {
        Some(d) => degree_meets(d, (n as f64 - 1.0) / 2.0 + t),
        None => true,
    };

    // deg_a[v] = |N(v) ∩ A| for every vertex; deg(v) - deg_a[v] covers B.
    let total_deg: Vec<u64> = (0..n).map(|v| g.degree(v)).collect();
    let mut deg_a: Vec<u64> = (0..n).map(|v| g.degree_within(v, &side_a)).collect();
    let mut edges_a = g.edges_within(&side_a);

    let swap_cap = choose2(a);
    let mut swaps = 0u64;
    let mut potential_trace = vec![edges_a];

    loop {
        let x = side_a
            .iter()
            .find(|&v| degree_violates(deg_a[v], thr_a));
        let Some(x) = x else { break };
        let y = (0..n)
            .find(|&v| !side_a.contains(v) && degree_violates(total_deg[v] - deg_a[v], thr_b));
        let Some(y) = y else { break };

        let adjacent = i64::from(g.has_edge(x, y));
        let new_edges_a = edges_a as i64 + deg_a[y] as i64 - deg_a[x] as i64 - adjacent;
        if new_edges_a <= edges_a as i64 || swaps >= swap_cap {
            // Only reachable when the entry hypothesis failed; stop rather
            // than risk cycling.
            break;
        }
        let new_edges_a = new_edges_a as u64;
        side_a.remove(x);
        for u in g.neighbors(x).iter() {
            deg_a[u] -= 1;
        }
        side_a.insert(y);
        for u in g.neighbors(y).iter() {
            deg_a[u] += 1;
        }
        edges_a = new_edges_a;
        debug_assert_eq!(edges_a, g.edges_within(&side_a));
        swaps += 1;
        potential_trace.push(edges_a);
    }

    let side_b = side_a.complement_within();
    let cond_a = side_a.iter().all(|v| degree_meets(deg_a[v], thr_a));
    let cond_b = side_b
        .iter()
        .all(|v| degree_meets(total_deg[v] - deg_a[v], thr_b));

    let (side, subset, guarantee, condition_satisfied) = if cond_a {
        (SplitSide::A, side_a, thr_a, true)
    } else if cond_b {
        (SplitSide::B, side_b, thr_b, true)
    } else {
        (SplitSide::A, side_a, thr_a, false)
    };
    Ok(SplitOutcome {
        side,
        subset,
        swaps_performed: swaps,
        guarantee,
        hypothesis_met,
        condition_satisfied,
        potential_trace,
    })
}

/// One level of the halving descent.
#[derive(Clone, Debug)]
pub struct HalvingLevel {
    pub level: usize,
    /// Order of the graph entering this level.
    pub size: usize,
    pub t: f64,
    pub a: usize,
    pub b: usize,
    pub side: SplitSide,
    pub swaps: u64,
    pub condition_satisfied: bool,
    /// The vertices descended into (labels of the host graph).
    pub chosen: VertexSet,
}

#[derive(Clone, Debug)]
pub struct HalvingOutcome {
    /// Exactly `k` vertices (labels of the host graph).
    pub subset: VertexSet,
    /// The surplus after the final level: `t_j`.
    pub final_t: f64,
    pub levels: Vec<HalvingLevel>,
    /// `t_j >= t_0 2^-j - 1`, recomputed (an algebraic identity, checked).
    pub t_bound_ok: bool,
    /// Flagged when the level count exceeded `log2(l_0/k) + 1`.
    pub level_bound_exceeded: bool,
    /// Every level's split certified its side.
    pub all_conditions_satisfied: bool,
}

/// Repeated greedy splits into the nearest multiples of `k` until exactly
/// `k` vertices remain; `alpha = 1/2`, `t` decays as `t' = (t-1)/2`.
///
/// `start` must be a nonempty multiple-of-`k` subset of `h`'s vertices. The
/// degree conditions at each level refer to the subgraph of `h` induced by
/// the surviving set, which is re-induced fresh each level.
pub fn halving_search(
    h: &Graph,
    start: &VertexSet,
    k: usize,
    t0: f64,
) -> Result<HalvingOutcome, BisectError> {
    let len = start.len();
    if k == 0 || len < k {
        return Err(BisectError::TooSmall { len, k });
    }
    if len % k != 0 {
        return Err(BisectError::NotMultipleOfK { len, k });
    }

    let l0 = len;
    let mut current = start.clone();
    let mut t = t0;
    let mut levels: Vec<HalvingLevel> = Vec::new();
    while current.len() > k {
        let size = current.len();
        let m = size / k;
        let a = (m / 2) * k;
        let b = m.div_ceil(2) * k;
        let labels = current.to_vec();
        let sub = induced(h, &current).expect("subset of host");
        let split = greedy_swap_split(&sub, a, b, t, 0.5, None)?;
        let chosen = VertexSet::from_indices(h.n(), split.subset.iter().map(|i| labels[i]))
            .expect("labels in range");
        levels.push(HalvingLevel {
            level: levels.len(),
            size,
            t,
            a,
            b,
            side: split.side,
            swaps: split.swaps_performed,
            condition_satisfied: split.condition_satisfied,
            chosen: chosen.clone(),
        });
        current = chosen;
        t = (t - 1.0) / 2.0;
    }

    let j = levels.len();
    let t_bound_ok = t >= t0 * 0.5f64.powi(j as i32) - 1.0 - 1e-9;
    let level_bound = ((l0 / k) as f64).log2() + 1.0;
    let level_bound_exceeded = j as f64 > level_bound + 1e-9;
    let all_conditions_satisfied = levels.iter().all(|l| l.condition_satisfied);
    Ok(HalvingOutcome {
        subset: current,
        final_t: t,
        levels,
        t_bound_ok,
        level_bound_exceeded,
        all_conditions_satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_gnp, Graph};

    #[test]
    fn complete_graph_no_swaps() {
        // K_4, a=b=2, t=3/2, alpha=1/2: thresholds are 3/4; any adjacent
        // pair qualifies immediately from the default init {0,1}.
        let k4 = Graph::complete(4).unwrap();
        let out = greedy_swap_split(&k4, 2, 2, 1.5, 0.5, None).unwrap();
        assert_eq!(out.side, SplitSide::A);
        assert_eq!(out.swaps_performed, 0);
        assert_eq!(out.guarantee, 0.75);
        assert!(out.hypothesis_met);
        assert!(out.condition_satisfied);
        assert_eq!(out.subset.to_vec(), vec![0, 1]);
    }

    #[test]
    fn empty_graph_degenerate_t() {
        // Empty on 4 vertices, t = 0: conditions read deg >= -1, vacuous.
        let e4 = Graph::empty(4).unwrap();
        let out = greedy_swap_split(&e4, 2, 2, 0.0, 0.5, None).unwrap();
        assert_eq!(out.side, SplitSide::A);
        assert_eq!(out.swaps_performed, 0);
        assert!(out.condition_satisfied);
        // Hypothesis needs delta >= 3/2; an empty graph misses it, but the
        // run is unaffected.
        assert!(!out.hypothesis_met);
    }

    #[test]
    fn measured_surplus_instance_verifies() {
        // t at the largest value the hypothesis allows: delta - (n-1)/2.
        let g = sample_gnp(30, 0.5, 3).unwrap();
        let delta = g.min_degree().unwrap();
        let t = delta as f64 - 29.0 / 2.0;
        let out = greedy_swap_split(&g, 15, 15, t, 0.5, None).unwrap();
        assert!(out.hypothesis_met);
        assert!(out.condition_satisfied);
        assert!(out.swaps_performed <= choose2(15));
        // Vertexwise recomputation of the certified side.
        let thr = out.guarantee;
        for v in out.subset.iter() {
            let d = g.degree_within(v, &out.subset);
            assert!(degree_meets(d, thr), "vertex {v} degree {d} below {thr}");
        }
        // Potential strictly increases at every swap.
        for w in out.potential_trace.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn alpha_extremes() {
        // alpha = 0 makes the A threshold t-free, alpha = 1 the B threshold.
        let g = sample_gnp(20, 0.6, 5).unwrap();
        let delta = g.min_degree().unwrap();
        let t = delta as f64 - 19.0 / 2.0;
        for alpha in [0.0, 1.0] {
            let out = greedy_swap_split(&g, 10, 10, t, alpha, None).unwrap();
            assert!(out.condition_satisfied);
            let expected = match (out.side, alpha == 0.0) {
                (SplitSide::A, true) => 4.0,                  // a/2 - 1
                (SplitSide::A, false) => 4.0 + t,             // a/2 - 1 + t
                (SplitSide::B, true) => 4.0 + t,              // b/2 - 1 + t
                (SplitSide::B, false) => 4.0,                 // b/2 - 1
            };
            assert!((out.guarantee - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_sizes_and_alpha() {
        let g = Graph::empty(5).unwrap();
        assert!(greedy_swap_split(&g, 2, 2, 0.0, 0.5, None).is_err());
        assert!(greedy_swap_split(&g, 3, 2, 0.0, 1.5, None).is_err());
        let bad_init = VertexSet::from_indices(5, [0]).unwrap();
        assert!(greedy_swap_split(&g, 3, 2, 0.0, 0.5, Some(&bad_init)).is_err());
    }

    #[test]
    fn empty_side_is_vacuous() {
        let g = sample_gnp(6, 0.5, 1).unwrap();
        let out = greedy_swap_split(&g, 0, 6, -5.0, 0.5, None).unwrap();
        // A is empty: vacuously clean, preferred.
        assert_eq!(out.side, SplitSide::A);
        assert!(out.subset.is_empty());
        assert!(out.condition_satisfied);
    }

    #[test]
    fn unmet_hypothesis_still_terminates() {
        // A sparse graph with an absurd t: the lemma's hypothesis fails but
        // the loop must stop and report honestly.
        let g = sample_gnp(24, 0.2, 9).unwrap();
        let out = greedy_swap_split(&g, 12, 12, 50.0, 0.5, None).unwrap();
        assert!(!out.hypothesis_met);
        assert!(out.swaps_performed <= choose2(12));
    }

    #[test]
    fn halving_zero_levels_when_already_at_k() {
        let g = Graph::complete(6).unwrap();
        let start = VertexSet::from_indices(6, [1, 2, 4]).unwrap();
        let out = halving_search(&g, &start, 3, 2.5).unwrap();
        assert_eq!(out.levels.len(), 0);
        assert_eq!(out.subset, start);
        assert_eq!(out.final_t, 2.5);
        assert!(out.t_bound_ok);
        assert!(!out.level_bound_exceeded);
    }

    #[test]
    fn halving_one_level_at_two_k() {
        let g = Graph::complete(8).unwrap();
        let start = VertexSet::full(8);
        let out = halving_search(&g, &start, 4, 1.0).unwrap();
        assert_eq!(out.levels.len(), 1);
        assert_eq!(out.levels[0].a, 4);
        assert_eq!(out.levels[0].b, 4);
        assert_eq!(out.subset.len(), 4);
    }

    #[test]
    fn halving_complete_graph_yields_clique() {
        // K_{4k}, k=3: every split condition holds on complete graphs, and
        // the final 3 vertices form a triangle.
        let k = 3;
        let g = Graph::complete(4 * k).unwrap();
        let out = halving_search(&g, &VertexSet::full(4 * k), k, 1.0).unwrap();
        assert_eq!(out.subset.len(), k);
        assert!(out.all_conditions_satisfied);
        assert_eq!(
            g.min_degree_within(&out.subset).unwrap(),
            (k - 1) as u64
        );
        assert!(out.t_bound_ok);
        assert!(!out.level_bound_exceeded);
    }

    #[test]
    fn halving_arithmetic_invariants() {
        let g = sample_gnp(36, 0.7, 13).unwrap();
        let k = 4;
        let out = halving_search(&g, &VertexSet::full(36), k, 3.0).unwrap();
        for level in &out.levels {
            assert_eq!(level.a + level.b, level.size);
            assert_eq!(level.a % k, 0);
            assert_eq!(level.b % k, 0);
            assert_eq!(level.chosen.len() % k, 0);
            assert!(level.chosen.len() < level.size);
        }
        assert_eq!(out.subset.len(), k);
        let j = out.levels.len() as f64;
        assert!(j <= (36.0 / k as f64).log2() + 1.0 + 1e-9);
    }

    #[test]
    fn halving_rejects_bad_start() {
        let g = Graph::complete(7).unwrap();
        let start = VertexSet::from_indices(7, [0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(
            halving_search(&g, &start, 3, 0.0),
            Err(BisectError::NotMultipleOfK { .. })
        ));
        let small = VertexSet::from_indices(7, [0, 1]).unwrap();
        assert!(matches!(
            halving_search(&g, &small, 3, 0.0),
            Err(BisectError::TooSmall { .. })
        ));
    }
}
