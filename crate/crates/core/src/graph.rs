//! Simple undirected graphs over dense vertex labels `[0, n)` with bitset
//! adjacency rows, plus the vertex-set type shared by every search in the
//! crate and the three graph discrepancy functionals.
//!
//! Everything here is immutable after construction and pure, so values can
//! be shared freely across threads.

use crate::half::HalfInt;
use crate::rng;
use rand_chacha::rand_core::RngCore;
use std::cmp::Ordering;
use std::fmt;

/// Soft cap on graph order; bitset rows stay manageable below this.
pub const MAX_VERTICES: usize = 50_000;

/// Which of the two complementary graphs a set or certificate refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphSide {
    Original,
    Complement,
}

impl GraphSide {
    pub fn flip(self) -> GraphSide {
        match self {
            GraphSide::Original => GraphSide::Complement,
            GraphSide::Complement => GraphSide::Original,
        }
    }
}

impl fmt::Display for GraphSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSide::Original => write!(f, "original"),
            GraphSide::Complement => write!(f, "complement"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    /// A vertex index at or above the host size.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A vertex set built for a different host size.
    CapacityMismatch { set_capacity: usize, n: usize },
    /// Requested order exceeds [`MAX_VERTICES`].
    TooManyVertices { n: usize },
    /// Probability outside `[0, 1]`.
    InvalidProbability { p: f64 },
    /// Two sets that must be disjoint share a vertex.
    OverlappingSets { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            GraphError::CapacityMismatch { set_capacity, n } => {
                write!(f, "vertex set over [0, {set_capacity}) used with a graph on {n} vertices")
            }
            GraphError::TooManyVertices { n } => {
                write!(f, "graph order {n} exceeds the supported maximum {MAX_VERTICES}")
            }
            GraphError::InvalidProbability { p } => write!(f, "probability {p} not in [0, 1]"),
            GraphError::OverlappingSets { vertex } => {
                write!(f, "sets must be disjoint but share vertex {vertex}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// `n * (n - 1) / 2` without overflow for the sizes we support.
pub fn choose2(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A subset of `[0, capacity)`, stored as a bitset.
///
/// Ordering (`Ord`) is lexicographic on the ascending list of members, so
/// `{0,2} < {1}` and the empty set precedes everything; this is the
/// tie-break order used by every exact search in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; words_for(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::empty(capacity);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut s = VertexSet::empty(capacity);
        s.insert(v);
        s
    }

    /// Builds a set from indices, rejecting out-of-range members.
    pub fn from_indices<I: IntoIterator<Item = usize>>(
        capacity: usize,
        indices: I,
    ) -> Result<Self, GraphError> {
        let mut s = VertexSet::empty(capacity);
        for v in indices {
            if v >= capacity {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: capacity });
            }
            s.insert(v);
        }
        Ok(s)
    }

    fn mask_tail(&mut self) {
        let rem = self.capacity % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.capacity, other.capacity);
        VertexSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `[0, capacity) \ self`.
    pub fn complement_within(&self) -> VertexSet {
        let mut s = VertexSet {
            capacity: self.capacity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(capacity: usize, words: Vec<u64>) -> VertexSet {
        debug_assert_eq!(words.len(), words_for(capacity));
        let mut s = VertexSet { capacity, words };
        s.mask_tail();
        s
    }

    /// A uniformly random subset of `[0, capacity)` in which each element is
    /// kept independently with probability 1/2.
    pub fn random_half<R: RngCore>(capacity: usize, rng: &mut R) -> VertexSet {
        let mut s = VertexSet::empty(capacity);
        for w in s.words.iter_mut() {
            *w = rng.next_u64();
        }
        s.mask_tail();
        s
    }

    /// A uniformly random `size`-subset (Fisher-Yates over the full range).
    pub fn random_subset_of_size<R: RngCore>(capacity: usize, size: usize, rng: &mut R) -> VertexSet {
        assert!(size <= capacity);
        let mut pool: Vec<usize> = (0..capacity).collect();
        let mut s = VertexSet::empty(capacity);
        for i in 0..size {
            let j = i + rng::below(rng, (capacity - i) as u64) as usize;
            pool.swap(i, j);
            s.insert(pool[i]);
        }
        s
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// A simple undirected graph on vertices `[0, n)`.
///
/// Adjacency is a symmetric, irreflexive bit matrix stored row-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let row_words = words_for(n);
        Ok(Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
        })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u != v {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for v in 0..n {
                g.set_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.set_edge(0, 1);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.row_words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.row_words + u / 64] |= 1u64 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        if u == v {
            return false;
        }
        self.bits[u * self.row_words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.row(v).iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Neighbours of `v` as a fresh set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).sum::<u64>() / 2
    }

    pub fn min_degree(&self) -> Option<u64> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// `|N(v) ∩ s|`.
    pub fn degree_within(&self, v: usize, s: &VertexSet) -> u64 {
        debug_assert_eq!(s.capacity, self.n);
        self.row(v)
            .iter()
            .zip(s.words())
            .map(|(r, m)| u64::from((r & m).count_ones()))
            .sum()
    }

    /// Number of edges inside `s`.
    pub fn edges_within(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.degree_within(v, s)).sum::<u64>() / 2
    }

    /// Number of edges with one endpoint in each of two disjoint sets.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> u64 {
        x.iter().map(|v| self.degree_within(v, y)).sum()
    }

    /// Minimum degree of the subgraph induced by `s` (`None` when `s` is empty).
    pub fn min_degree_within(&self, s: &VertexSet) -> Option<u64> {
        s.iter().map(|v| self.degree_within(v, s)).min()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// The complement graph: `u ~ v` exactly when they are non-adjacent in `g`.
///
/// Involution: `complement(complement(g)) == g`.
pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph::empty(g.n).expect("complement preserves order");
    for u in 0..g.n {
        for v in (u + 1)..g.n {
            if !g.has_edge(u, v) {
                out.set_edge(u, v);
            }
        }
    }
    out
}

/// The subgraph induced by `s`, with vertices relabelled to `[0, |s|)` in
/// ascending original order (so `s.to_vec()` is the new-to-old label map).
pub fn induced(g: &Graph, s: &VertexSet) -> Result<Graph, GraphError> {
    if s.capacity() != g.n {
        return Err(GraphError::CapacityMismatch {
            set_capacity: s.capacity(),
            n: g.n,
        });
    }
    let members = s.to_vec();
    let mut out = Graph::empty(members.len())?;
    for (i, &u) in members.iter().enumerate() {
        for (j, &v) in members.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                out.set_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// Graph discrepancy `D(X) = e(X) - C(|X|,2)/2`, exact.
///
/// Antisymmetric under complementation: `D` over the complement graph equals
/// `-D` over `g` for the same `X`.
pub fn discrepancy(g: &Graph, x: &VertexSet) -> HalfInt {
    assert_eq!(x.capacity(), g.n, "vertex set capacity mismatch");
    let e = g.edges_within(x);
    HalfInt::from_twice(2 * e as i64 - choose2(x.len()) as i64)
}

/// Skew discrepancy `D_nu(X) = |D(X)| - nu * |X|^{3/2}`.
///
/// The `|D|` part is exact; only the penalty is floating-point. Invariant
/// under complementation of `g`.
pub fn skew_discrepancy(g: &Graph, x: &VertexSet, nu: f64) -> f64 {
    let d = discrepancy(g, x);
    d.abs().to_f64() - nu * size_pow_3_2(x.len())
}

/// `s^{3/2}` via `sqrt(s) * s` (exact for perfect squares).
pub fn size_pow_3_2(s: usize) -> f64 {
    let s = s as f64;
    s.sqrt() * s
}

/// Relative discrepancy `D(X,Y) = e(X,Y) - |X||Y|/2` across a disjoint pair.
///
/// Additivity: `D(X ∪ Y) = D(X) + D(Y) + D(X,Y)`.
pub fn relative_discrepancy(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<HalfInt, GraphError> {
    assert_eq!(x.capacity(), g.n, "vertex set capacity mismatch");
    assert_eq!(y.capacity(), g.n, "vertex set capacity mismatch");
    if !x.is_disjoint(y) {
        let overlap = x.intersection(y).iter().next().expect("non-disjoint");
        return Err(GraphError::OverlappingSets { vertex: overlap });
    }
    let e = g.edges_between(x, y);
    Ok(HalfInt::from_twice(
        2 * e as i64 - (x.len() as i64) * (y.len() as i64),
    ))
}

/// Erdős–Rényi sample `G(n, p)` from a fixed, documented generator.
///
/// Pairs `(u, v)` with `u < v` are visited in row-major order; the pair is an
/// edge exactly when the next uniform draw in `[0,1)` (top 53 bits of a
/// ChaCha8 word, seed = `seed`, stream 0) is below `p`. Identical
/// `(n, p, seed)` give identical graphs on every platform.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability { p });
    }
    let mut g = Graph::empty(n)?;
    let mut rng = rng::chacha(seed, 0);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng::unit_f64(&mut rng) < p {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k3 = Graph::complete(3).unwrap();
        let c = complement(&k3);
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.n(), 3);
    }

    #[test]
    fn complement_of_c5_is_a_5_cycle() {
        // C_5 is self-complementary up to isomorphism: all degrees 2, 5 edges.
        let c5 = Graph::cycle(5).unwrap();
        let c = complement(&c5);
        assert_eq!(c.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(c.degree(v), 2);
        }
    }

    #[test]
    fn complement_is_involution() {
        let g = sample_gnp(8, 0.5, 1).unwrap();
        assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn induced_complete() {
        let k5 = Graph::complete(5).unwrap();
        let s = VertexSet::from_indices(5, [1, 3, 4]).unwrap();
        let h = induced(&k5, &s).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn induced_path_from_cycle() {
        // C_5 restricted to {0,1,2} keeps edges {01, 12}: a path with
        // degree sequence (1,2,1).
        let c5 = Graph::cycle(5).unwrap();
        let s = VertexSet::from_indices(5, [0, 1, 2]).unwrap();
        let h = induced(&c5, &s).unwrap();
        assert_eq!(h.edge_count(), 2);
        let mut degs: Vec<u64> = (0..3).map(|v| h.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn induced_empty_set() {
        let g = Graph::complete(4).unwrap();
        let h = induced(&g, &VertexSet::empty(4)).unwrap();
        assert_eq!(h.n(), 0);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn induced_rejects_capacity_mismatch() {
        let g = Graph::complete(4).unwrap();
        let s = VertexSet::from_indices(5, [0]).unwrap();
        assert!(induced(&g, &s).is_err());
    }

    #[test]
    fn discrepancy_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(discrepancy(&k4, &VertexSet::full(4)).twice(), 6); // D = 3

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(discrepancy(&c5, &VertexSet::full(5)).twice(), 0);

        assert_eq!(discrepancy(&k4, &VertexSet::singleton(4, 2)).twice(), 0);
        assert_eq!(discrepancy(&k4, &VertexSet::empty(4)).twice(), 0);
    }

    #[test]
    fn discrepancy_antisymmetric_under_complement() {
        let g = sample_gnp(9, 0.4, 7).unwrap();
        let c = complement(&g);
        let mut rng = crate::rng::chacha(3, 0);
        for _ in 0..50 {
            let x = VertexSet::random_half(9, &mut rng);
            assert_eq!(discrepancy(&c, &x), -discrepancy(&g, &x));
            // |D| symmetric, so the skew form is complement-invariant.
            assert_eq!(skew_discrepancy(&c, &x, 1.25), skew_discrepancy(&g, &x, 1.25));
        }
    }

    #[test]
    fn skew_discrepancy_examples() {
        let k4 = Graph::complete(4).unwrap();
        let full = VertexSet::full(4);
        // nu = 0 reduces to |D|.
        assert_eq!(skew_discrepancy(&k4, &full, 0.0), 3.0);
        // 4^{3/2} = 8 exactly, so D_1 = 3 - 8 = -5.
        assert_eq!(skew_discrepancy(&k4, &full, 1.0), -5.0);
        assert_eq!(skew_discrepancy(&k4, &VertexSet::empty(4), 3.0), 0.0);
    }

    #[test]
    fn relative_discrepancy_examples() {
        // K_{2,2}: sides {0,1} and {2,3}, all four cross edges present.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let x = VertexSet::from_indices(4, [0, 1]).unwrap();
        let y = VertexSet::from_indices(4, [2, 3]).unwrap();
        assert_eq!(relative_discrepancy(&g, &x, &y).unwrap().twice(), 4); // 4 - 2 = 2

        let e = Graph::empty(5).unwrap();
        let x = VertexSet::from_indices(5, [0, 1]).unwrap();
        let y = VertexSet::from_indices(5, [2, 3, 4]).unwrap();
        assert_eq!(relative_discrepancy(&e, &x, &y).unwrap().twice(), -6); // -3

        // Overlap rejected.
        let y_bad = VertexSet::from_indices(5, [1, 2]).unwrap();
        assert!(relative_discrepancy(&e, &x, &y_bad).is_err());
    }

    #[test]
    fn additivity_identity() {
        let g = sample_gnp(10, 0.5, 11).unwrap();
        let mut rng = crate::rng::chacha(5, 0);
        for _ in 0..50 {
            let x = VertexSet::random_half(10, &mut rng);
            let mut y = VertexSet::random_half(10, &mut rng);
            y.subtract(&x);
            let mut u = x.clone();
            u.union_with(&y);
            let lhs = discrepancy(&g, &u);
            let rhs = discrepancy(&g, &x) + discrepancy(&g, &y)
                + relative_discrepancy(&g, &x, &y).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = sample_gnp(12, 0.35, 2).unwrap();
        let mut rng = crate::rng::chacha(6, 0);
        for _ in 0..20 {
            let x = VertexSet::random_half(12, &mut rng);
            let sum: u64 = x.iter().map(|v| g.degree_within(v, &x)).sum();
            assert_eq!(sum, 2 * g.edges_within(&x));
        }
    }

    #[test]
    fn gnp_extremes() {
        let kn = sample_gnp(6, 1.0, 0).unwrap();
        assert_eq!(kn.edge_count(), 15);
        let empty = sample_gnp(6, 0.0, 0).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn gnp_deterministic() {
        let a = sample_gnp(10, 0.5, 42).unwrap();
        let b = sample_gnp(10, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_gnp(10, 0.5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_rejects_bad_probability() {
        assert!(sample_gnp(4, 1.5, 0).is_err());
        assert!(sample_gnp(4, -0.1, 0).is_err());
    }

    #[test]
    fn vertex_set_lexicographic_order() {
        let e = VertexSet::empty(4);
        let s0 = VertexSet::from_indices(4, [0]).unwrap();
        let s01 = VertexSet::from_indices(4, [0, 1]).unwrap();
        let s02 = VertexSet::from_indices(4, [0, 2]).unwrap();
        let s1 = VertexSet::from_indices(4, [1]).unwrap();
        assert!(e < s0);
        assert!(s0 < s01);
        assert!(s01 < s02);
        assert!(s02 < s1);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 69]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        let c = s.complement_within();
        assert_eq!(c.len(), 70 - 3);
        assert!(s.is_disjoint(&c));
    }

    #[test]
    fn from_indices_rejects_out_of_range() {
        assert!(VertexSet::from_indices(3, [3]).is_err());
    }
}
