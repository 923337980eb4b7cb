//! Set-system discrepancy machinery.
//!
//! A [`SetSystem`] is an ordered list of subsets of a ground set `[l)`.
//! `disc` is the minimum over ±1 colorings of the largest absolute set sum
//! (the `||Ax||_inf` form of the definition, which is what every downstream
//! use needs two-sided). Two constructive backends provide colorings: an
//! exhaustive search for small grounds and a best-of-budget random search
//! whose value is certified by re-evaluation, never by theory. On top of
//! those sit binary-digit linear-discrepancy rounding, proportional
//! selection of a `p`-fraction of every tracked set, and an exact
//! measurement of the maximum graph discrepancy over bounded subsets.

use crate::graph::{choose2, Graph, VertexSet};
use crate::half::HalfInt;
use crate::rng;
use std::fmt;

/// Default ground-set bound for exhaustive coloring searches.
pub const DEFAULT_EXACT_GROUND: usize = 22;

/// State guard for exhaustive subset enumeration (~10^8 states).
pub const ENUMERATION_GUARD: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum DiscError {
    LengthMismatch { expected: usize, got: usize },
    GroundTooLarge { ground: usize, limit: usize },
    SetOutOfRange { set_index: usize },
    InvalidProbability { p: f64 },
    InvalidBits { bits: u32 },
    InvalidSign { index: usize },
    EnumerationTooLarge { states: u128, guard: u128 },
    Parse { line: usize, message: String },
}

impl fmt::Display for DiscError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscError::LengthMismatch { expected, got } => {
                write!(f, "vector length {got} does not match ground size {expected}")
            }
            DiscError::GroundTooLarge { ground, limit } => {
                write!(f, "ground size {ground} exceeds exact-search limit {limit}")
            }
            DiscError::SetOutOfRange { set_index } => {
                write!(f, "set {set_index} contains elements outside the ground set")
            }
            DiscError::InvalidProbability { p } => write!(f, "probability {p} not in [0, 1]"),
            DiscError::InvalidBits { bits } => {
                write!(f, "quantization bits {bits} not in 1..=52")
            }
            DiscError::InvalidSign { index } => {
                write!(f, "coloring entry {index} is not -1 or +1")
            }
            DiscError::EnumerationTooLarge { states, guard } => {
                write!(f, "exact enumeration needs {states} states, over the {guard} guard")
            }
            DiscError::Parse { line, message } => {
                write!(f, "set system parse error on line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for DiscError {}

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// An ordered system of subsets of `[ground_size)`. Order is significant:
/// the index identifies the set throughout restriction and rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: usize,
    sets: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new(ground: usize, sets: Vec<VertexSet>) -> Result<Self, DiscError> {
        for (i, s) in sets.iter().enumerate() {
            if s.capacity() != ground {
                return Err(DiscError::SetOutOfRange { set_index: i });
            }
        }
        Ok(SetSystem { ground, sets })
    }

    pub fn from_members(
        ground: usize,
        members: &[Vec<usize>],
    ) -> Result<Self, DiscError> {
        let mut sets = Vec::with_capacity(members.len());
        for (i, m) in members.iter().enumerate() {
            let set = VertexSet::from_indices(ground, m.iter().copied())
                .map_err(|_| DiscError::SetOutOfRange { set_index: i })?;
            sets.push(set);
        }
        Ok(SetSystem { ground, sets })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Restriction to `x`: every set intersected with `x`, ground relabelled
    /// to `[|x|)` in ascending order, set order preserved.
    pub fn restrict(&self, x: &VertexSet) -> SetSystem {
        assert_eq!(x.capacity(), self.ground, "restriction set capacity mismatch");
        let members = x.to_vec();
        let new_ground = members.len();
        let sets = self
            .sets
            .iter()
            .map(|a| {
                let mut out = VertexSet::empty(new_ground);
                for (new_i, &old) in members.iter().enumerate() {
                    if a.contains(old) {
                        out.insert(new_i);
                    }
                }
                out
            })
            .collect();
        SetSystem {
            ground: new_ground,
            sets,
        }
    }

    /// Text format: first line `l m`, then `m` lines of space-separated
    /// 0-based element indices (an empty line is an empty set).
    pub fn parse_text(text: &str) -> Result<SetSystem, DiscError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(DiscError::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let mut parts = header.split_whitespace();
        let ground: usize = parts
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or(DiscError::Parse {
                line: 1,
                message: "header must be `<ground> <set-count>`".into(),
            })?;
        let m: usize = parts
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or(DiscError::Parse {
                line: 1,
                message: "header must be `<ground> <set-count>`".into(),
            })?;
        if parts.next().is_some() {
            return Err(DiscError::Parse {
                line: 1,
                message: "trailing tokens in header".into(),
            });
        }
        let mut sets = Vec::with_capacity(m);
        for i in 0..m {
            let line_no = i + 2;
            let line = lines.next().ok_or(DiscError::Parse {
                line: line_no,
                message: format!("expected {m} set lines"),
            })?;
            let mut set = VertexSet::empty(ground);
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| DiscError::Parse {
                    line: line_no,
                    message: format!("bad element `{tok}`"),
                })?;
                if v >= ground {
                    return Err(DiscError::Parse {
                        line: line_no,
                        message: format!("element {v} outside ground [0, {ground})"),
                    });
                }
                set.insert(v);
            }
            sets.push(set);
        }
        Ok(SetSystem { ground, sets })
    }

    pub fn emit_text(&self) -> String {
        let mut out = format!("{} {}\n", self.ground, self.sets.len());
        for s in &self.sets {
            let row: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A ±1 coloring of the ground set, stored as the set of +1 positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    plus: VertexSet,
}

impl Coloring {
    pub fn from_plus_set(plus: VertexSet) -> Self {
        Coloring { plus }
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self, DiscError> {
        let mut plus = VertexSet::empty(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => plus.insert(i),
                -1 => {}
                _ => return Err(DiscError::InvalidSign { index: i }),
            }
        }
        Ok(Coloring { plus })
    }

    pub fn len(&self) -> usize {
        self.plus.capacity()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.capacity() == 0
    }

    pub fn sign(&self, i: usize) -> i8 {
        if self.plus.contains(i) {
            1
        } else {
            -1
        }
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.plus.capacity()).map(|i| self.sign(i)).collect()
    }

    pub fn plus_set(&self) -> &VertexSet {
        &self.plus
    }

    /// `chi(S) = sum of signs over S = 2|S ∩ plus| - |S|`.
    pub fn set_sum(&self, s: &VertexSet) -> i64 {
        2 * s.intersection_len(&self.plus) as i64 - s.len() as i64
    }
}

/// A 0/1 selection of ground elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    chosen: VertexSet,
}

impl Selection {
    pub fn from_set(chosen: VertexSet) -> Self {
        Selection { chosen }
    }

    pub fn as_set(&self) -> &VertexSet {
        &self.chosen
    }

    pub fn into_set(self) -> VertexSet {
        self.chosen
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.chosen.capacity())
            .map(|i| u8::from(self.chosen.contains(i)))
            .collect()
    }
}

/// A point of the unit cube `[0,1]^l`.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalPoint {
    values: Vec<f64>,
}

impl FractionalPoint {
    pub fn new(values: Vec<f64>) -> Result<Self, DiscError> {
        if let Some(&p) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(DiscError::InvalidProbability { p });
        }
        Ok(FractionalPoint { values })
    }

    pub fn constant(len: usize, p: f64) -> Result<Self, DiscError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(DiscError::InvalidProbability { p });
        }
        Ok(FractionalPoint {
            values: vec![p; len],
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// ---------------------------------------------------------------------------
// disc evaluation and backends
// ---------------------------------------------------------------------------

/// `max_i |chi(A_i)|` (0 for an empty system).
pub fn eval_disc(h: &SetSystem, chi: &Coloring) -> Result<u64, DiscError> {
    if chi.len() != h.ground {
        return Err(DiscError::LengthMismatch {
            expected: h.ground,
            got: chi.len(),
        });
    }
    Ok(h.sets
        .iter()
        .map(|a| chi.set_sum(a).unsigned_abs())
        .max()
        .unwrap_or(0))
}

/// Exhaustive minimum of [`eval_disc`] over all `2^l` colorings.
///
/// The witness is the lexicographically first minimizer in `(-1 < +1)`
/// coordinate order; negating a coloring preserves its value, so ties always
/// exist and this break is what makes the answer deterministic.
pub fn disc_exact(h: &SetSystem, max_ground: usize) -> Result<(u64, Coloring), DiscError> {
    let l = h.ground;
    if l > max_ground || l > 26 {
        return Err(DiscError::GroundTooLarge {
            ground: l,
            limit: max_ground.min(26),
        });
    }
    let masks: Vec<(u64, i64)> = h
        .sets
        .iter()
        .map(|s| {
            let m = s.words().first().copied().unwrap_or(0);
            (m, s.len() as i64)
        })
        .collect();

    let mut best_value = u64::MAX;
    let mut best_plus = 0u64;
    for code in 0u64..1u64 << l {
        // Lexicographic coordinate order = numeric order of the bit-reversed code.
        let plus = if l == 0 { 0 } else { code.reverse_bits() >> (64 - l) };
        let mut value = 0u64;
        for &(m, sz) in &masks {
            let s = 2 * (plus & m).count_ones() as i64 - sz;
            value = value.max(s.unsigned_abs());
            if value >= best_value {
                break;
            }
        }
        if value < best_value {
            best_value = value;
            best_plus = plus;
            if best_value == 0 {
                break;
            }
        }
    }
    let mut plus_set = VertexSet::empty(l);
    for j in 0..l {
        if best_plus >> j & 1 == 1 {
            plus_set.insert(j);
        }
    }
    Ok((best_value, Coloring::from_plus_set(plus_set)))
}

/// Best of `budget` uniformly random colorings, value certified by
/// re-evaluation. Deterministic given the seed.
pub fn disc_random(h: &SetSystem, budget: u64, seed: u64) -> (u64, Coloring) {
    let budget = budget.max(1);
    let mut rng = rng::chacha(seed, 0);
    let mut best_value = u64::MAX;
    let mut best: Option<Coloring> = None;
    for _ in 0..budget {
        let chi = Coloring::from_plus_set(VertexSet::random_half(h.ground, &mut rng));
        let value = eval_disc(h, &chi).expect("coloring built to length");
        if value < best_value {
            best_value = value;
            best = Some(chi);
        }
    }
    (best_value, best.expect("budget >= 1"))
}

/// A strategy producing a coloring for any (restricted) set system.
pub trait ColoringBackend {
    fn color(&self, h: &SetSystem) -> Result<Coloring, DiscError>;

    /// Deviation figure the backend aims for on a ground of size `l`; used
    /// to pick the selection probability in thinning. The classical target
    /// is `6 sqrt(l)`.
    fn target_deviation(&self, ground: usize) -> f64 {
        6.0 * (ground as f64).sqrt()
    }
}

/// Exhaustive minimizer; refuses grounds above `max_ground`.
#[derive(Clone, Copy, Debug)]
pub struct ExactBackend {
    pub max_ground: usize,
}

impl Default for ExactBackend {
    fn default() -> Self {
        ExactBackend {
            max_ground: DEFAULT_EXACT_GROUND,
        }
    }
}

impl ColoringBackend for ExactBackend {
    fn color(&self, h: &SetSystem) -> Result<Coloring, DiscError> {
        disc_exact(h, self.max_ground).map(|(_, chi)| chi)
    }
}

/// Best-of-budget random colorings.
#[derive(Clone, Copy, Debug)]
pub struct RandomBackend {
    pub budget: u64,
    pub seed: u64,
}

impl ColoringBackend for RandomBackend {
    fn color(&self, h: &SetSystem) -> Result<Coloring, DiscError> {
        Ok(disc_random(h, self.budget, self.seed).1)
    }
}

/// Exact up to `max_ground`, random beyond. The workhorse for pipelines that
/// meet both small and large instances.
#[derive(Clone, Copy, Debug)]
pub struct AutoBackend {
    pub exact: ExactBackend,
    pub random: RandomBackend,
}

impl ColoringBackend for AutoBackend {
    fn color(&self, h: &SetSystem) -> Result<Coloring, DiscError> {
        if h.ground_size() <= self.exact.max_ground {
            self.exact.color(h)
        } else {
            self.random.color(h)
        }
    }
}

// ---------------------------------------------------------------------------
// Linear-discrepancy rounding and proportional selection
// ---------------------------------------------------------------------------

/// One digit round of [`lindisc_round`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitRound {
    /// Digit index, 0 = least significant.
    pub digit: u32,
    pub support_size: usize,
    /// Certified `eval_disc` of the backend coloring on the support.
    pub disc: u64,
}

/// Result of rounding a fractional point to a selection.
#[derive(Clone, Debug)]
pub struct RoundingOutcome {
    pub selection: Selection,
    pub rounds: Vec<DigitRound>,
    /// Quantization + weighted per-round bound on `||A(x - c)||_inf`;
    /// never smaller than
    /// `achieved` (up to float evaluation).
    pub reported_bound: f64,
    /// Recomputed `||A(x - c)||_inf` of the returned selection.
    pub achieved: f64,
}

/// Binary-digit rounding of `c` to a 0/1 point through a coloring backend.
///
/// `c` is quantized to `bits` binary digits. From the least significant digit
/// upward, the support of the digit is colored by the backend and each
/// element's digit is rounded up (+1) or down (-1) accordingly, halving the
/// number of distinct fractional levels each round. The error satisfies
/// `||A(x-c)||_inf <= max|A_i| * 2^-bits + sum_t 2^(t-bits) * disc_t`, and
/// both that bound and the true achieved error are returned.
pub fn lindisc_round(
    h: &SetSystem,
    c: &FractionalPoint,
    backend: &dyn ColoringBackend,
    bits: u32,
) -> Result<RoundingOutcome, DiscError> {
    if c.len() != h.ground {
        return Err(DiscError::LengthMismatch {
            expected: h.ground,
            got: c.len(),
        });
    }
    if !(1..=52).contains(&bits) {
        return Err(DiscError::InvalidBits { bits });
    }
    let scale = (1u64 << bits) as f64;
    let top = 1u64 << bits;
    let mut q: Vec<u64> = c
        .values()
        .iter()
        .map(|&cj| ((cj * scale).round() as u64).min(top))
        .collect();

    let mut rounds = Vec::new();
    for t in 0..bits {
        let mut support = VertexSet::empty(h.ground);
        for (j, &qj) in q.iter().enumerate() {
            if qj >> t & 1 == 1 {
                support.insert(j);
            }
        }
        if support.is_empty() {
            continue;
        }
        let sub = h.restrict(&support);
        let chi = backend.color(&sub)?;
        let disc = eval_disc(&sub, &chi)?;
        for (new_i, j) in support.iter().enumerate() {
            if chi.sign(new_i) == 1 {
                q[j] += 1 << t;
            } else {
                q[j] -= 1 << t;
            }
        }
        rounds.push(DigitRound {
            digit: t,
            support_size: sub.ground_size(),
            disc,
        });
    }

    let mut chosen = VertexSet::empty(h.ground);
    for (j, &qj) in q.iter().enumerate() {
        debug_assert!(qj == 0 || qj == top, "digit rounding left q[{j}] = {qj}");
        if qj == top {
            chosen.insert(j);
        }
    }
    let selection = Selection::from_set(chosen);

    let quant_bound = h.max_set_size() as f64 / scale;
    let rounding_bound: f64 = rounds
        .iter()
        .map(|r| r.disc as f64 * (1u64 << r.digit) as f64 / scale)
        .sum();
    let achieved = h
        .sets
        .iter()
        .map(|a| {
            let hits = a.intersection_len(selection.as_set()) as f64;
            let mass: f64 = a.iter().map(|j| c.values()[j]).sum();
            (hits - mass).abs()
        })
        .fold(0.0, f64::max);

    Ok(RoundingOutcome {
        selection,
        rounds,
        reported_bound: quant_bound + rounding_bound,
        achieved,
    })
}

/// Proportional selection with a certified realized deviation.
#[derive(Clone, Debug)]
pub struct ProportionalSelection {
    pub selected: VertexSet,
    /// `max_i | |A_i ∩ Y| - p |A_i| |`, recomputed exactly from `Y`.
    pub deviation: f64,
    pub rounding: RoundingOutcome,
}

/// Selects `Y ⊆ [l)` so that every tracked set receives close to a
/// `p`-fraction of its elements, by rounding the all-`p` point. The contract
/// is the realized deviation (always recomputed); the classical `6 sqrt(l)`
/// figure is only the target.
pub fn select_proportional(
    h: &SetSystem,
    p: f64,
    backend: &dyn ColoringBackend,
    bits: u32,
) -> Result<ProportionalSelection, DiscError> {
    let c = FractionalPoint::constant(h.ground, p)?;
    let rounding = lindisc_round(h, &c, backend, bits)?;
    let selected = rounding.selection.as_set().clone();
    let deviation = h
        .sets
        .iter()
        .map(|a| (a.intersection_len(&selected) as f64 - p * a.len() as f64).abs())
        .fold(0.0, f64::max);
    Ok(ProportionalSelection {
        selected,
        deviation,
        rounding,
    })
}

// ---------------------------------------------------------------------------
// Max-subset graph discrepancy
// ---------------------------------------------------------------------------

/// How to search for the max-|D| subset.
#[derive(Clone, Copy, Debug)]
pub enum MaxDiscMode {
    /// Exhaustive over all subsets of size <= t (guarded).
    Exact,
    /// Multi-start local search; result is a certified lower bound only.
    Heuristic { starts: u32, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct MaxSubsetDiscrepancy {
    pub subset: VertexSet,
    /// `|D(subset)|`, recomputed.
    pub value: HalfInt,
    /// True when produced by exhaustive enumeration (a true maximum);
    /// false for the local-search lower bound.
    pub exact: bool,
}

fn enumeration_states(n: usize, t: usize) -> u128 {
    let t = t.min(n);
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for j in 0..=t {
        if j > 0 {
            binom = binom.saturating_mul((n - j + 1) as u128) / j as u128;
        }
        total = total.saturating_add(binom);
        if total > ENUMERATION_GUARD * 2 {
            break;
        }
    }
    total
}

/// `max_{|S| <= t} |D(S)|` with its maximizer.
///
/// Exact mode enumerates every subset (lexicographically first maximizer);
/// heuristic mode runs seeded hill-climbs and reports a certified lower
/// bound. Exact mode refuses instances over the enumeration guard.
pub fn max_subset_discrepancy(
    g: &Graph,
    t: usize,
    mode: MaxDiscMode,
) -> Result<MaxSubsetDiscrepancy, DiscError> {
    match mode {
        MaxDiscMode::Exact => {
            let states = enumeration_states(g.n(), t);
            if states > ENUMERATION_GUARD {
                return Err(DiscError::EnumerationTooLarge {
                    states,
                    guard: ENUMERATION_GUARD,
                });
            }
            let mut search = ExactMaxDisc {
                g,
                t: t.min(g.n()),
                deg_in: vec![0; g.n()],
                current: Vec::new(),
                edges: 0,
                best_twice_abs: -1,
                best: Vec::new(),
            };
            search.run(0);
            let subset = VertexSet::from_indices(g.n(), search.best.iter().copied())
                .expect("vertices within range");
            let value = crate::graph::discrepancy(g, &subset).abs();
            debug_assert_eq!(value.twice(), search.best_twice_abs);
            Ok(MaxSubsetDiscrepancy {
                subset,
                value,
                exact: true,
            })
        }
        MaxDiscMode::Heuristic { starts, seed } => {
            let best = heuristic_max_disc(g, t, starts.max(1), seed);
            let value = crate::graph::discrepancy(g, &best).abs();
            Ok(MaxSubsetDiscrepancy {
                subset: best,
                value,
                exact: false,
            })
        }
    }
}

struct ExactMaxDisc<'a> {
    g: &'a Graph,
    t: usize,
    deg_in: Vec<u64>,
    current: Vec<usize>,
    edges: u64,
    best_twice_abs: i64,
    best: Vec<usize>,
}

impl ExactMaxDisc<'_> {
    fn run(&mut self, start: usize) {
        let size = self.current.len();
        let twice = 2 * self.edges as i64 - choose2(size) as i64;
        if twice.abs() > self.best_twice_abs {
            self.best_twice_abs = twice.abs();
            self.best = self.current.clone();
        }
        if size == self.t {
            return;
        }
        for v in start..self.g.n() {
            let gained = self.deg_in[v];
            self.edges += gained;
            for u in self.g.neighbors(v).iter() {
                self.deg_in[u] += 1;
            }
            self.current.push(v);
            self.run(v + 1);
            self.current.pop();
            for u in self.g.neighbors(v).iter() {
                self.deg_in[u] -= 1;
            }
            self.edges -= gained;
        }
    }
}

fn heuristic_max_disc(g: &Graph, t: usize, starts: u32, seed: u64) -> VertexSet {
    let n = g.n();
    let t = t.min(n);
    let mut best: Option<(i64, VertexSet)> = None;
    for s in 0..starts {
        let mut rng = rng::chacha(seed, u64::from(s));
        let size = if t == 0 { 0 } else { 1 + rng::below(&mut rng, t as u64) as usize };
        let mut set = VertexSet::random_subset_of_size(n, size, &mut rng);
        let mut deg_in: Vec<u64> = (0..n).map(|v| g.degree_within(v, &set)).collect();
        let mut twice =
            2 * g.edges_within(&set) as i64 - choose2(set.len()) as i64;
        loop {
            let size = set.len() as i64;
            let mut best_move: Option<(i64, Move)> = None;
            let consider = |cand_twice: i64, mv: Move, best_move: &mut Option<(i64, Move)>| {
                if cand_twice.abs() > twice.abs()
                    && best_move.as_ref().is_none_or(|(b, _)| cand_twice.abs() > b.abs())
                {
                    *best_move = Some((cand_twice, mv));
                }
            };
            for v in 0..n {
                if set.contains(v) {
                    if size >= 2 {
                        let cand = twice - 2 * deg_in[v] as i64 + (size - 1);
                        consider(cand, Move::Remove(v), &mut best_move);
                    }
                } else if (set.len()) < t {
                    let cand = twice + 2 * deg_in[v] as i64 - size;
                    consider(cand, Move::Add(v), &mut best_move);
                }
            }
            if best_move.is_none() {
                for u in set.to_vec() {
                    for v in 0..n {
                        if set.contains(v) {
                            continue;
                        }
                        let adj = i64::from(g.has_edge(u, v));
                        let cand = twice + 2 * (deg_in[v] as i64 - deg_in[u] as i64 - adj);
                        consider(cand, Move::Swap(u, v), &mut best_move);
                    }
                }
            }
            match best_move {
                None => break,
                Some((cand_twice, mv)) => {
                    apply_move(g, &mut set, &mut deg_in, mv);
                    twice = cand_twice;
                }
            }
        }
        let abs = twice.abs();
        if best.as_ref().is_none_or(|(b, _)| abs > *b) {
            best = Some((abs, set));
        }
    }
    best.expect("at least one start").1
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Add(usize),
    Remove(usize),
    Swap(usize, usize),
}

fn apply_move(g: &Graph, set: &mut VertexSet, deg_in: &mut [u64], mv: Move) {
    match mv {
        Move::Add(v) => {
            set.insert(v);
            for u in g.neighbors(v).iter() {
                deg_in[u] += 1;
            }
        }
        Move::Remove(v) => {
            set.remove(v);
            for u in g.neighbors(v).iter() {
                deg_in[u] -= 1;
            }
        }
        Move::Swap(u, v) => {
            apply_move(g, set, deg_in, Move::Remove(u));
            apply_move(g, set, deg_in, Move::Add(v));
        }
    }
}
