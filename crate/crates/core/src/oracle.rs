//! Exhaustive ground truth for desk-scale parameters.
//!
//! [`best_min_degree_subset`] finds the true best min-degree `k`-subset by
//! branch-and-bound whose pruning provably never changes the answer relative
//! to naive enumeration (a prefix is cut only when no completion can beat
//! the incumbent strictly, which also preserves the lexicographic-first
//! tie-break). [`fixed_quasi_ramsey_holds`] applies it to a graph and its
//! complement against an exact rational threshold, and [`compute_rstar`]
//! enumerates every graph of every size in range to pin down exact
//! fixed quasi-Ramsey numbers for tiny parameters.

use crate::graph::{complement, Graph, GraphSide, VertexSet};
use crate::graph6::{complement_code, emit_graph6, graph_from_code};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Guard on `C(n, k)` for subset enumeration.
pub const SUBSET_GUARD: u128 = 100_000_000;

/// Largest graph order whose full `2^C(n,2)` enumeration we accept.
pub const RSTAR_MAX_N: usize = 7;

/// Node guard for clique search.
pub const CLIQUE_NODE_GUARD: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum OracleError {
    SubsetGuardExceeded { n: usize, k: usize, count: u128 },
    InvalidK { k: usize },
    InvalidThreshold { c: Ratio<i64> },
    InfeasibleSize { n: usize, max: usize },
    SearchGuardExceeded { nodes: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SubsetGuardExceeded { n, k, count } => {
                write!(f, "C({n},{k}) = {count} subsets exceeds the {SUBSET_GUARD} guard")
            }
            OracleError::InvalidK { k } => write!(f, "subset order k = {k} must be >= 1"),
            OracleError::InvalidThreshold { c } => {
                write!(f, "threshold c = {c} must lie in [0, 1]")
            }
            OracleError::InfeasibleSize { n, max } => {
                write!(f, "graph enumeration at n = {n} is infeasible (max {max})")
            }
            OracleError::SearchGuardExceeded { nodes } => {
                write!(f, "search explored {nodes} nodes, over the guard")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// `C(n, k)`, saturating once far past the guard.
pub fn subset_count(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for j in 1..=k {
        out = out.saturating_mul((n - k + j) as u128) / j as u128;
        if out > SUBSET_GUARD * 16 {
            return out;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Best min-degree subset
// ---------------------------------------------------------------------------

struct SubsetSearch<'a> {
    g: &'a Graph,
    k: usize,
    deg_in: Vec<u64>,
    current: Vec<usize>,
    best_value: i64,
    best: Vec<usize>,
    prune: bool,
}

impl SubsetSearch<'_> {
    fn run(&mut self, start: usize) {
        let size = self.current.len();
        if size == self.k {
            let value = self
                .current
                .iter()
                .map(|&v| self.deg_in[v] as i64)
                .min()
                .expect("k >= 1");
            if value > self.best_value {
                self.best_value = value;
                self.best = self.current.clone();
            }
            return;
        }
        let slots = self.k - size;
        if self.g.n() - start < slots {
            return;
        }
        if self.prune {
            // No completion can push a chosen vertex above deg_in + slots,
            // and min degree never exceeds k - 1. Cutting at <= incumbent
            // keeps the first (lexicographically smallest) maximizer.
            let mut bound = self.k as i64 - 1;
            for &v in &self.current {
                bound = bound.min(self.deg_in[v] as i64 + slots as i64);
            }
            if bound <= self.best_value {
                return;
            }
        }
        for v in start..self.g.n() {
            for u in self.g.neighbors(v).iter() {
                self.deg_in[u] += 1;
            }
            self.current.push(v);
            self.run(v + 1);
            self.current.pop();
            for u in self.g.neighbors(v).iter() {
                self.deg_in[u] -= 1;
            }
        }
    }
}

fn best_subset_impl(g: &Graph, k: usize, prune: bool) -> Option<(VertexSet, u64)> {
    if k > g.n() {
        return None;
    }
    let mut search = SubsetSearch {
        g,
        k,
        deg_in: vec![0; g.n()],
        current: Vec::new(),
        best_value: -1,
        best: Vec::new(),
        prune,
    };
    search.run(0);
    let set = VertexSet::from_indices(g.n(), search.best.iter().copied()).expect("in range");
    Some((set, search.best_value as u64))
}

/// The `k`-subset maximizing the induced minimum degree (lexicographically
/// first among maximizers), or `None` when `g` has fewer than `k` vertices.
pub fn best_min_degree_subset(
    g: &Graph,
    k: usize,
) -> Result<Option<(VertexSet, u64)>, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidK { k });
    }
    let count = subset_count(g.n(), k);
    if count > SUBSET_GUARD {
        return Err(OracleError::SubsetGuardExceeded { n: g.n(), k, count });
    }
    Ok(best_subset_impl(g, k, true))
}

/// Naive enumeration twin of [`best_min_degree_subset`] (no pruning); used
/// for differential testing.
pub fn best_min_degree_subset_naive(
    g: &Graph,
    k: usize,
) -> Result<Option<(VertexSet, u64)>, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidK { k });
    }
    let count = subset_count(g.n(), k);
    if count > SUBSET_GUARD {
        return Err(OracleError::SubsetGuardExceeded { n: g.n(), k, count });
    }
    Ok(best_subset_impl(g, k, false))
}

// ---------------------------------------------------------------------------
// Fixed quasi-Ramsey predicate
// ---------------------------------------------------------------------------

fn validate_threshold(c: Ratio<i64>) -> Result<(), OracleError> {
    if c < Ratio::from_integer(0) || c > Ratio::from_integer(1) {
        return Err(OracleError::InvalidThreshold { c });
    }
    Ok(())
}

/// Exact comparison `deg >= c * (k - 1)`.
fn meets_rational(deg: u64, c: Ratio<i64>, k: usize) -> bool {
    let lhs = i128::from(deg) * i128::from(*c.denom());
    let rhs = i128::from(*c.numer()) * (k as i128 - 1);
    lhs >= rhs
}

/// True iff `g` or its complement has a `k`-subset of induced minimum degree
/// at least `c (k-1)` (exact rational comparison). False when `g` has fewer
/// than `k` vertices.
pub fn fixed_quasi_ramsey_holds(
    g: &Graph,
    k: usize,
    c: Ratio<i64>,
) -> Result<bool, OracleError> {
    validate_threshold(c)?;
    if k == 0 {
        return Err(OracleError::InvalidK { k });
    }
    if k > g.n() {
        return Ok(false);
    }
    if *c.numer() == 0 {
        return Ok(true); // min degree >= 0 always; a k-subset exists.
    }
    if let Some((_, best)) = best_min_degree_subset(g, k)? {
        if meets_rational(best, c, k) {
            return Ok(true);
        }
    }
    let comp = complement(g);
    if let Some((_, best)) = best_min_degree_subset(&comp, k)? {
        if meets_rational(best, c, k) {
            return Ok(true);
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Exact R*_c(k)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RStarQuery {
    pub c: Ratio<i64>,
    pub k: usize,
    pub n_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RStarOutcome {
    /// Least `n` such that every graph on every order in `[n, n_max]`
    /// satisfies the predicate, with a failing witness at `n - 1`.
    Determined {
        n: usize,
        witness_graph6: String,
        verified_up_to: usize,
    },
    /// Some graph at `n_max` itself fails; undecided within range.
    Unknown { n_max: usize },
}

/// One line of the append-only results cache (JSON lines).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RStarRecord {
    pub c_num: i64,
    pub c_den: i64,
    pub k: usize,
    pub n_max: usize,
    /// "determined" or "unknown".
    pub verdict: String,
    pub n: Option<usize>,
    pub witness_graph6: Option<String>,
    pub timestamp: String,
    pub code_version: String,
}

impl RStarRecord {
    pub fn from_outcome(q: &RStarQuery, out: &RStarOutcome, timestamp: String) -> Self {
        let (verdict, n, witness) = match out {
            RStarOutcome::Determined {
                n, witness_graph6, ..
            } => ("determined".to_string(), Some(*n), Some(witness_graph6.clone())),
            RStarOutcome::Unknown { .. } => ("unknown".to_string(), None, None),
        };
        RStarRecord {
            c_num: *q.c.numer(),
            c_den: *q.c.denom(),
            k: q.k,
            n_max: q.n_max,
            verdict,
            n,
            witness_graph6: witness,
            timestamp,
            code_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Does every graph on exactly `n` vertices satisfy the predicate?
/// Returns the first failing graph code otherwise. Enumeration pairs each
/// graph with its complement (the predicate is complement-invariant), so
/// only codes `<=` their complement code are tested.
fn all_graphs_pass(n: usize, k: usize, c: Ratio<i64>) -> Result<Option<u64>, OracleError> {
    if n > RSTAR_MAX_N {
        return Err(OracleError::InfeasibleSize { n, max: RSTAR_MAX_N });
    }
    if k > n {
        // No k-subset exists; the lexicographically first graph witnesses.
        return Ok(Some(0));
    }
    let pair_bits = n * n.saturating_sub(1) / 2;
    for code in 0u64..1u64 << pair_bits {
        if complement_code(n.max(1), code) < code {
            continue;
        }
        let g = graph_from_code(n, code);
        if !fixed_quasi_ramsey_holds(&g, k, c)? {
            return Ok(Some(code));
        }
    }
    Ok(None)
}

/// Exhaustively determines `R*_c(k)` within `[.., n_max]`.
///
/// Every order from `k - 1` up to `n_max` is checked explicitly — the
/// predicate is not automatically inherited upward, so the answer is the
/// least `n` with every order in `[n, n_max]` passing, flagged as verified
/// only up to `n_max`. The witness at `n - 1` is the first failing graph in
/// code order (for `n - 1 < k`, any graph fails for want of a `k`-subset).
pub fn compute_rstar(q: &RStarQuery) -> Result<RStarOutcome, OracleError> {
    validate_threshold(q.c)?;
    if q.k == 0 {
        return Err(OracleError::InvalidK { k: q.k });
    }
    if q.n_max > RSTAR_MAX_N {
        return Err(OracleError::InfeasibleSize {
            n: q.n_max,
            max: RSTAR_MAX_N,
        });
    }
    let lo = q.k.saturating_sub(1);
    if q.n_max < q.k {
        return Ok(RStarOutcome::Unknown { n_max: q.n_max });
    }

    // witness[n] = first failing code at order n, if any.
    let mut failures: Vec<(usize, Option<u64>)> = Vec::new();
    for n in lo..=q.n_max {
        failures.push((n, all_graphs_pass(n, q.k, q.c)?));
    }

    // Longest all-pass suffix of the checked range.
    let mut boundary: Option<usize> = None;
    for &(n, ref fail) in failures.iter().rev() {
        if fail.is_none() {
            boundary = Some(n);
        } else {
            break;
        }
    }
    match boundary {
        None => Ok(RStarOutcome::Unknown { n_max: q.n_max }),
        Some(n) => {
            // Order k - 1 always fails (no k-subset), so the boundary sits
            // strictly above `lo` and n - 1 carries a recorded witness.
            let code = failures
                .iter()
                .find(|&&(m, _)| m == n - 1)
                .and_then(|(_, f)| *f)
                .expect("n - 1 failed by construction");
            let witness = emit_graph6(&graph_from_code(n - 1, code));
            Ok(RStarOutcome::Determined {
                n,
                witness_graph6: witness,
                verified_up_to: q.n_max,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Homogeneous sets
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogeneousKind {
    Clique,
    Coclique,
}

impl HomogeneousKind {
    /// The side on which the set has min degree `k - 1`.
    pub fn side(self) -> GraphSide {
        match self {
            HomogeneousKind::Clique => GraphSide::Original,
            HomogeneousKind::Coclique => GraphSide::Complement,
        }
    }
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    k: usize,
    current: Vec<usize>,
    nodes: u64,
}

impl CliqueSearch<'_> {
    fn run(&mut self, candidates: &VertexSet) -> Result<Option<Vec<usize>>, OracleError> {
        self.nodes += 1;
        if self.nodes > CLIQUE_NODE_GUARD {
            return Err(OracleError::SearchGuardExceeded { nodes: self.nodes });
        }
        if self.current.len() == self.k {
            return Ok(Some(self.current.clone()));
        }
        let need = self.k - self.current.len();
        if candidates.len() < need {
            return Ok(None);
        }
        for v in candidates.to_vec() {
            let mut next = candidates.intersection(&self.g.neighbors(v));
            // Only extend upward to keep lexicographic-first output.
            for w in 0..=v {
                if next.contains(w) {
                    next.remove(w);
                }
            }
            self.current.push(v);
            if let Some(found) = self.run(&next)? {
                return Ok(Some(found));
            }
            self.current.pop();
        }
        Ok(None)
    }
}

fn find_clique(g: &Graph, k: usize) -> Result<Option<VertexSet>, OracleError> {
    if k == 0 || k > g.n() {
        return Ok(None);
    }
    let mut search = CliqueSearch {
        g,
        k,
        current: Vec::new(),
        nodes: 0,
    };
    let all = VertexSet::full(g.n());
    match search.run(&all)? {
        Some(v) => Ok(Some(
            VertexSet::from_indices(g.n(), v.into_iter()).expect("in range"),
        )),
        None => Ok(None),
    }
}

/// A `k`-clique in `g`, or failing that a `k`-coclique (a clique of the
/// complement), or `None` when neither exists. Lexicographically first
/// witness of the found kind.
pub fn homogeneous_set_search(
    g: &Graph,
    k: usize,
) -> Result<Option<(VertexSet, HomogeneousKind)>, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidK { k });
    }
    if let Some(s) = find_clique(g, k)? {
        return Ok(Some((s, HomogeneousKind::Clique)));
    }
    let comp = complement(g);
    if let Some(s) = find_clique(&comp, k)? {
        return Ok(Some((s, HomogeneousKind::Coclique)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample_gnp;

    fn ratio(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn complete_graph_best_subset() {
        let g = Graph::complete(7).unwrap();
        let (s, v) = best_min_degree_subset(&g, 3).unwrap().unwrap();
        assert_eq!(v, 2);
        assert_eq!(s.to_vec(), vec![0, 1, 2]); // lexicographic tie-break
    }

    #[test]
    fn cycle_best_subset() {
        // Best induced 3-set of C_5 is a path: min degree 1.
        let c5 = Graph::cycle(5).unwrap();
        let (s, v) = best_min_degree_subset(&c5, 3).unwrap().unwrap();
        assert_eq!(v, 1);
        assert_eq!(s.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn empty_graph_best_subset() {
        let g = Graph::empty(6).unwrap();
        let (_, v) = best_min_degree_subset(&g, 4).unwrap().unwrap();
        assert_eq!(v, 0);
    }

    #[test]
    fn k_larger_than_n_is_none() {
        let g = Graph::complete(3).unwrap();
        assert!(best_min_degree_subset(&g, 4).unwrap().is_none());
    }

    #[test]
    fn guard_rejects_huge_instances() {
        let g = Graph::empty(87).unwrap();
        assert!(matches!(
            best_min_degree_subset(&g, 6),
            Err(OracleError::SubsetGuardExceeded { .. })
        ));
    }

    #[test]
    fn pruned_equals_naive() {
        // Differential test on random graphs with n <= 8, >= 1000 cases.
        let mut cases = 0;
        for seed in 0..170u64 {
            let n = 4 + (seed % 5) as usize; // 4..=8
            let g = sample_gnp(n, 0.3 + 0.1 * (seed % 5) as f64, seed).unwrap();
            for k in 1..=n {
                let a = best_min_degree_subset(&g, k).unwrap();
                let b = best_min_degree_subset_naive(&g, k).unwrap();
                match (a, b) {
                    (Some((sa, va)), Some((sb, vb))) => {
                        assert_eq!(va, vb, "value mismatch seed {seed} k {k}");
                        assert_eq!(sa, sb, "witness mismatch seed {seed} k {k}");
                    }
                    (None, None) => {}
                    _ => panic!("presence mismatch"),
                }
                cases += 1;
            }
        }
        assert!(cases >= 1000);
    }

    #[test]
    fn fixed_predicate_examples() {
        // Any pair is homogeneous on one side: k=2, c=1/2 always true.
        for seed in 0..10u64 {
            let g = sample_gnp(5, 0.5, seed).unwrap();
            assert!(fixed_quasi_ramsey_holds(&g, 2, ratio(1, 2)).unwrap());
        }
        // A single vertex has no 2-subset.
        let g1 = Graph::complete(1).unwrap();
        assert!(!fixed_quasi_ramsey_holds(&g1, 2, ratio(1, 2)).unwrap());
        // C_5 at k=3, c=1/2: threshold 1, the path gives exactly 1.
        let c5 = Graph::cycle(5).unwrap();
        assert!(fixed_quasi_ramsey_holds(&c5, 3, ratio(1, 2)).unwrap());
    }

    #[test]
    fn fixed_predicate_complement_invariant() {
        for seed in 0..20u64 {
            let g = sample_gnp(6, 0.5, seed).unwrap();
            let c = complement(&g);
            for k in 2..=4 {
                assert_eq!(
                    fixed_quasi_ramsey_holds(&g, k, ratio(1, 2)).unwrap(),
                    fixed_quasi_ramsey_holds(&c, k, ratio(1, 2)).unwrap()
                );
            }
        }
    }

    #[test]
    fn fixed_predicate_exact_rational_boundary() {
        // Threshold c(k-1) must compare exactly: c = 1/3, k = 4 gives 1.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // P_4: min degree 1 = threshold exactly.
        assert!(fixed_quasi_ramsey_holds(&p4, 4, ratio(1, 3)).unwrap());
    }

    #[test]
    fn rstar_half_two_is_two() {
        let out = compute_rstar(&RStarQuery {
            c: ratio(1, 2),
            k: 2,
            n_max: 4,
        })
        .unwrap();
        match out {
            RStarOutcome::Determined { n, witness_graph6, .. } => {
                assert_eq!(n, 2);
                // Witness at n=1: the single-vertex graph.
                assert_eq!(witness_graph6, "@");
            }
            RStarOutcome::Unknown { .. } => panic!("should be determined"),
        }
    }

    #[test]
    fn rstar_zero_threshold_is_k() {
        for k in 1..=4usize {
            let out = compute_rstar(&RStarQuery {
                c: ratio(0, 1),
                k,
                n_max: 6,
            })
            .unwrap();
            match out {
                RStarOutcome::Determined { n, .. } => assert_eq!(n, k),
                RStarOutcome::Unknown { .. } => panic!("should be determined"),
            }
        }
    }

    #[test]
    fn rstar_guard() {
        assert!(matches!(
            compute_rstar(&RStarQuery {
                c: ratio(1, 2),
                k: 3,
                n_max: 12,
            }),
            Err(OracleError::InfeasibleSize { .. })
        ));
    }

    #[test]
    fn homogeneous_examples() {
        let k5 = Graph::complete(5).unwrap();
        let (s, kind) = homogeneous_set_search(&k5, 3).unwrap().unwrap();
        assert_eq!(kind, HomogeneousKind::Clique);
        assert_eq!(s.to_vec(), vec![0, 1, 2]);

        // C_5 has no triangle and its complement is again a 5-cycle.
        let c5 = Graph::cycle(5).unwrap();
        assert!(homogeneous_set_search(&c5, 3).unwrap().is_none());

        let e4 = Graph::empty(4).unwrap();
        let (s, kind) = homogeneous_set_search(&e4, 3).unwrap().unwrap();
        assert_eq!(kind, HomogeneousKind::Coclique);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn ramsey_three_three_on_six_vertices() {
        // Every graph on 6 vertices has a triangle or an independent
        // 3-set; the oracle verifies the classic fact exhaustively.
        for code in 0u64..1 << 15 {
            let g = graph_from_code(6, code);
            assert!(
                homogeneous_set_search(&g, 3).unwrap().is_some(),
                "code {code} has no homogeneous 3-set"
            );
        }
    }
}
