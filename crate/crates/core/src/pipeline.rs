//! End-to-end search for a k-vertex induced subgraph of high minimum degree
//! in a graph or its complement, emitting an independently verifiable
//! certificate.
//!
//! The route mirrors the constructive chain the rest of the crate provides:
//! extraction finds a verified dense subgraph `H` on `l >= 2k` vertices, a
//! greedy swap split carves `H` into `a = k + (l mod k)` and `b = l - a`,
//! the `a`-side thins down to `k` via proportional selection while the
//! `b`-side descends by halving search, and the winner is re-verified
//! against the input graph. Desk-scale graphs rarely meet the asymptotic
//! hypotheses, so the driver retries extraction over a decreasing `nu`
//! ladder, tries both split branches, and finally falls back to the
//! exhaustive oracle (or, above the enumeration guard, a seeded greedy
//! subset search). Every certificate's `verified` flag is set from a fresh
//! degree recomputation — a failed chain yields an honest `verified: false`,
//! never a fabricated success.

use crate::bisect::{greedy_swap_split, halving_search, HalvingOutcome, SplitOutcome, SplitSide};
use crate::discrepancy::{AutoBackend, ExactBackend, RandomBackend};
use crate::extraction::{
    decay_ratios, variable_quasi_ramsey, ArgmaxMode, ExtractError, ExtractionResult,
    ExtractionStep, VariableOutcome,
};
use crate::graph::{complement, discrepancy, induced, Graph, GraphSide, VertexSet};
use crate::graph6::emit_graph6;
use crate::oracle::{best_min_degree_subset, homogeneous_set_search, subset_count, SUBSET_GUARD};
use crate::rng;
use crate::threshold::degree_meets;
use crate::thinning::{thin_to_k, ThinningReport};
use crate::fnv1a64;
use rand_chacha::rand_core::RngCore;
use serde::{Deserialize, Serialize};
use std::fmt;

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetKind {
    /// `(k-1)/2`.
    Half,
    /// `(k-1)/2 + D' sqrt((k-1)/ln k)` with `D' = 1/sqrt(n/(k ln k))`
    /// computed from the actual input (input-relative, not a universal
    /// constant).
    HalfPlus,
}

/// The requested minimum-degree target.
pub fn target_value(kind: TargetKind, n: usize, k: usize) -> f64 {
    let base = (k as f64 - 1.0) / 2.0;
    match kind {
        TargetKind::Half => base,
        TargetKind::HalfPlus => {
            let ln_k = (k as f64).ln();
            let d = n as f64 / (k as f64 * ln_k);
            base + (1.0 / d.sqrt()) * ((k as f64 - 1.0) / ln_k).sqrt()
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineParams {
    pub nu: f64,
    pub mode: ArgmaxMode,
    pub seed: u64,
    /// Ground-size bound for the exact coloring backend.
    pub exact_coloring_ground: usize,
    /// Budget for the random coloring backend beyond that bound.
    pub coloring_budget: u64,
    /// Quantization digits for linear-discrepancy rounding.
    pub bits: u32,
    pub fallback_enabled: bool,
    pub target_kind: TargetKind,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            nu: 160.0,
            mode: ArgmaxMode::Auto,
            seed: 0,
            exact_coloring_ground: 22,
            coloring_budget: 256,
            bits: 20,
            fallback_enabled: true,
            target_kind: TargetKind::Half,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PipelineError {
    KTooSmall { k: usize },
    GraphTooSmall { n: usize, k: usize },
    Malformed { reason: String },
    Extract(ExtractError),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::KTooSmall { k } => write!(f, "target order k = {k} must be >= 2"),
            PipelineError::GraphTooSmall { n, k } => {
                write!(f, "graph on {n} vertices cannot contain a {k}-subset")
            }
            PipelineError::Malformed { reason } => write!(f, "malformed certificate: {reason}"),
            PipelineError::Extract(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PipelineError {}

impl From<ExtractError> for PipelineError {
    fn from(e: ExtractError) -> Self {
        PipelineError::Extract(e)
    }
}

// ---------------------------------------------------------------------------
// Certificate schema (stable JSON, version field first)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    /// FNV-1a 64 of the input's graph6 string, 16 lowercase hex digits.
    pub input_hash: String,
    pub side: GraphSide,
    pub k: usize,
    pub vertices: Vec<usize>,
    pub achieved: u64,
    pub target: f64,
    pub target_kind: TargetKind,
    pub verified: bool,
    pub params: ParamsRecord,
    pub trace: CertTrace,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub nu: f64,
    pub mode: String,
    pub starts: u32,
    pub seed: u64,
    pub exact_coloring_ground: usize,
    pub coloring_budget: u64,
    pub bits: u32,
    pub fallback_enabled: bool,
}

impl ParamsRecord {
    fn from_params(p: &PipelineParams) -> Self {
        let (mode, starts) = match p.mode {
            ArgmaxMode::Exact => ("exact".to_string(), 0),
            ArgmaxMode::Heuristic { starts } => ("heuristic".to_string(), starts),
            ArgmaxMode::Auto => ("auto".to_string(), crate::extraction::DEFAULT_STARTS),
        };
        ParamsRecord {
            nu: p.nu,
            mode,
            starts,
            seed: p.seed,
            exact_coloring_ground: p.exact_coloring_ground,
            coloring_budget: p.coloring_budget,
            bits: p.bits,
            fallback_enabled: p.fallback_enabled,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CertTrace {
    /// The `nu` values attempted, in order.
    pub attempts: Vec<f64>,
    pub homogeneous: Option<HomogeneousTrace>,
    pub extraction: Option<ExtractionTrace>,
    pub split: Option<SplitTrace>,
    pub thinning: Option<ThinningTrace>,
    pub halving: Option<HalvingTrace>,
    /// "none", "exhaustive", or "heuristic".
    pub fallback: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomogeneousTrace {
    pub side: GraphSide,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepTrace {
    pub index: usize,
    pub removed: Vec<usize>,
    pub disc_twice: i64,
    pub skew: f64,
    pub remaining: usize,
}

impl StepTrace {
    fn from_step(s: &ExtractionStep) -> Self {
        StepTrace {
            index: s.index,
            removed: s.removed.to_vec(),
            disc_twice: s.disc.twice(),
            skew: s.skew,
            remaining: s.remaining,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtractionTrace {
    pub nu: f64,
    pub side: GraphSide,
    pub order: usize,
    pub achieved: u64,
    pub target: f64,
    pub subset: Vec<usize>,
    pub positive_mass_original: usize,
    pub positive_mass_complement: usize,
    pub mass_condition_original: bool,
    pub mass_condition_complement: bool,
    pub steps: Vec<StepTrace>,
    /// `D(X_{i_{l+3}})/D(X_{i_l})` along the chosen side's positive steps;
    /// diagnostic only.
    pub decay_ratios: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitTrace {
    pub a: usize,
    pub b: usize,
    pub t: f64,
    pub alpha: f64,
    pub side: SplitSide,
    pub swaps: u64,
    pub guarantee: f64,
    pub hypothesis_met: bool,
    pub condition_satisfied: bool,
}

impl SplitTrace {
    fn from_outcome(o: &SplitOutcome, a: usize, b: usize, t: f64) -> Self {
        SplitTrace {
            a,
            b,
            t,
            alpha: 0.5,
            side: o.side,
            swaps: o.swaps_performed,
            guarantee: o.guarantee,
            hypothesis_met: o.hypothesis_met,
            condition_satisfied: o.condition_satisfied,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThinningTrace {
    pub order: usize,
    pub p: f64,
    pub selection_ran: bool,
    pub realized_deviation: f64,
    pub removed_from_y: usize,
    pub eta_effective: f64,
    pub hypothesis_met: bool,
    pub guarantee_with_beta: Option<f64>,
    pub window_ok: bool,
}

impl ThinningTrace {
    fn from_report(r: &ThinningReport, order: usize) -> Self {
        ThinningTrace {
            order,
            p: r.p,
            selection_ran: r.selection_ran,
            realized_deviation: r.realized_deviation,
            removed_from_y: r.removed_from_y,
            eta_effective: r.eta_effective,
            hypothesis_met: r.hypothesis_met,
            guarantee_with_beta: r.guarantee_with_beta,
            window_ok: r.window_ok,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalvingLevelTrace {
    pub level: usize,
    pub size: usize,
    pub t: f64,
    pub a: usize,
    pub b: usize,
    pub side: SplitSide,
    pub swaps: u64,
    pub condition_satisfied: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalvingTrace {
    pub start_order: usize,
    pub t0: f64,
    pub levels: Vec<HalvingLevelTrace>,
    pub final_t: f64,
    pub t_bound_ok: bool,
    pub level_bound_exceeded: bool,
    pub all_conditions_satisfied: bool,
}

impl HalvingTrace {
    fn from_outcome(o: &HalvingOutcome, start_order: usize, t0: f64) -> Self {
        HalvingTrace {
            start_order,
            t0,
            levels: o
                .levels
                .iter()
                .map(|l| HalvingLevelTrace {
                    level: l.level,
                    size: l.size,
                    t: l.t,
                    a: l.a,
                    b: l.b,
                    side: l.side,
                    swaps: l.swaps,
                    condition_satisfied: l.condition_satisfied,
                })
                .collect(),
            final_t: o.final_t,
            t_bound_ok: o.t_bound_ok,
            level_bound_exceeded: o.level_bound_exceeded,
            all_conditions_satisfied: o.all_conditions_satisfied,
        }
    }
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default)]
struct StageTraces {
    split: Option<SplitTrace>,
    thinning: Option<ThinningTrace>,
    halving: Option<HalvingTrace>,
}

struct Candidate {
    side: GraphSide,
    subset: VertexSet,
    achieved: u64,
    stages: StageTraces,
    extraction: Option<ExtractionTrace>,
}

fn candidate_rank(c: &Candidate) -> (u64, bool) {
    (c.achieved, c.side == GraphSide::Original)
}

fn better_candidate(a: &Candidate, b: &Candidate) -> bool {
    let (ra, rb) = (candidate_rank(a), candidate_rank(b));
    if ra != rb {
        return ra > rb;
    }
    a.subset < b.subset
}

/// The decreasing `nu` schedule: halvings of the requested `nu` down to
/// 1/1024, then a final 0. Values so large that even the best observed
/// discrepancy cannot beat a singleton's penalty are skipped — a quick
/// seeded probe of `max |D|` supplies the screen, and the screen only
/// prunes attempts that would return nothing.
fn nu_ladder(g: &Graph, params: &PipelineParams) -> Vec<f64> {
    let mut values = Vec::new();
    let mut v = params.nu;
    while v >= 1.0 / 1024.0 && values.len() < 32 {
        values.push(v);
        v /= 2.0;
    }
    values.push(0.0);
    if g.n() >= 2 {
        if let Ok(probe) =
            crate::extraction::argmax_skew(g, 0.0, params.mode, rng::derive_seed(params.seed, 0x5eed))
        {
            let d_max = discrepancy(g, &probe).abs().to_f64();
            let cap = d_max / 8f64.sqrt(); // 2^{3/2}
            values.retain(|&nu| nu == 0.0 || nu <= cap + 1e-12);
        }
    }
    values
}

fn extraction_trace(
    res: &ExtractionResult,
    nu: f64,
    search: &crate::extraction::VariableSearch,
) -> ExtractionTrace {
    let steps = match res.side {
        GraphSide::Original => &search.original_steps,
        GraphSide::Complement => &search.complement_steps,
    };
    ExtractionTrace {
        nu,
        side: res.side,
        order: res.order,
        achieved: res.achieved_min_degree,
        target: res.target,
        subset: res.subset.to_vec(),
        positive_mass_original: search.positive_mass[0],
        positive_mass_complement: search.positive_mass[1],
        mass_condition_original: search.mass_condition[0],
        mass_condition_complement: search.mass_condition[1],
        steps: steps.iter().map(StepTrace::from_step).collect(),
        decay_ratios: decay_ratios(steps),
    }
}

/// Runs split + (thinning | halving) on an extracted subgraph, returning
/// candidate k-sets in deterministic preference order (the split's returned
/// branch first).
fn run_stages(
    side_graph: &Graph,
    res: &ExtractionResult,
    k: usize,
    nu: f64,
    params: &PipelineParams,
) -> Vec<(VertexSet, StageTraces)> {
    let l = res.order;
    let backend = AutoBackend {
        exact: ExactBackend {
            max_ground: params.exact_coloring_ground,
        },
        random: RandomBackend {
            budget: params.coloring_budget,
            seed: rng::derive_seed(params.seed, 0xc010),
        },
    };
    let mut out = Vec::new();

    if l < 2 * k {
        // Order already in [k, 2k): thin directly (P = l/k in [1, 2)).
        let Ok(h) = induced(side_graph, &res.subset) else {
            return out;
        };
        let labels = res.subset.to_vec();
        if let Ok(report) = thin_to_k(&h, k, &backend, params.bits) {
            let s = VertexSet::from_indices(
                side_graph.n(),
                report.z.iter().map(|i| labels[i]),
            )
            .expect("labels in range");
            out.push((
                s,
                StageTraces {
                    split: None,
                    thinning: Some(ThinningTrace::from_report(&report, l)),
                    halving: None,
                },
            ));
        }
        return out;
    }

    let x = l % k;
    let a = k + x;
    let b = l - k - x;
    let t = nu * ((l as f64 - 1.0).sqrt());
    let labels = res.subset.to_vec();
    let Ok(h) = induced(side_graph, &res.subset) else {
        return out;
    };
    let Ok(split) = greedy_swap_split(&h, a, b, t, 0.5, None) else {
        return out;
    };
    let split_trace = SplitTrace::from_outcome(&split, a, b, t);

    let (side_a_local, side_b_local) = match split.side {
        SplitSide::A => (split.subset.clone(), split.subset.complement_within()),
        SplitSide::B => (split.subset.complement_within(), split.subset.clone()),
    };
    let branch_order = match split.side {
        SplitSide::A => [SplitSide::A, SplitSide::B],
        SplitSide::B => [SplitSide::B, SplitSide::A],
    };

    for branch in branch_order {
        match branch {
            SplitSide::A => {
                let a_orig = VertexSet::from_indices(
                    side_graph.n(),
                    side_a_local.iter().map(|i| labels[i]),
                )
                .expect("labels in range");
                let Ok(ha) = induced(side_graph, &a_orig) else {
                    continue;
                };
                let a_labels = a_orig.to_vec();
                if let Ok(report) = thin_to_k(&ha, k, &backend, params.bits) {
                    let s = VertexSet::from_indices(
                        side_graph.n(),
                        report.z.iter().map(|i| a_labels[i]),
                    )
                    .expect("labels in range");
                    out.push((
                        s,
                        StageTraces {
                            split: Some(split_trace.clone()),
                            thinning: Some(ThinningTrace::from_report(&report, a)),
                            halving: None,
                        },
                    ));
                }
            }
            SplitSide::B => {
                let b_orig = VertexSet::from_indices(
                    side_graph.n(),
                    side_b_local.iter().map(|i| labels[i]),
                )
                .expect("labels in range");
                let t0 = t / 2.0 - 0.5;
                if let Ok(halving) = halving_search(side_graph, &b_orig, k, t0) {
                    out.push((
                        halving.subset.clone(),
                        StageTraces {
                            split: Some(split_trace.clone()),
                            thinning: None,
                            halving: Some(HalvingTrace::from_outcome(&halving, b, t0)),
                        },
                    ));
                }
            }
        }
    }
    out
}

/// Seeded greedy search for a high-min-degree k-subset; the deterministic
/// stand-in for the exhaustive oracle above the enumeration guard. Start 0
/// grows greedily from the densest seed vertex; later starts are random.
/// Swap moves maximize (min degree, internal edge count) lexicographically.
fn heuristic_min_degree_subset(g: &Graph, k: usize, seed: u64, starts: u32) -> (VertexSet, u64) {
    let n = g.n();
    debug_assert!(k <= n && k >= 1);
    let mut best: Option<(u64, u64, VertexSet)> = None;

    for s in 0..starts {
        let mut rng = rng::chacha(seed, u64::from(s));
        let mut set = if s == 0 {
            let mut set = VertexSet::empty(n);
            let top = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
            set.insert(top);
            while set.len() < k {
                let pick = (0..n)
                    .filter(|&v| !set.contains(v))
                    .max_by_key(|&v| (g.degree_within(v, &set), g.degree(v), std::cmp::Reverse(v)))
                    .unwrap();
                set.insert(pick);
            }
            set
        } else {
            VertexSet::random_subset_of_size(n, k, &mut rng)
        };
        let _ = rng.next_u64();

        let mut deg_in: Vec<u64> = (0..n).map(|v| g.degree_within(v, &set)).collect();
        let score = |set: &VertexSet, deg_in: &[u64]| -> (u64, u64) {
            let min = set.iter().map(|v| deg_in[v]).min().unwrap_or(0);
            let sum: u64 = set.iter().map(|v| deg_in[v]).sum();
            (min, sum)
        };
        let mut current = score(&set, &deg_in);
        loop {
            let members = set.to_vec();
            let mut chosen: Option<((u64, u64), usize, usize)> = None;
            for &u in &members {
                for v in 0..n {
                    if set.contains(v) {
                        continue;
                    }
                    // Score of set - u + v.
                    let mut min = u64::MAX;
                    let mut sum = 0u64;
                    for &w in &members {
                        if w == u {
                            continue;
                        }
                        let d = deg_in[w] - u64::from(g.has_edge(w, u))
                            + u64::from(g.has_edge(w, v));
                        min = min.min(d);
                        sum += d;
                    }
                    let dv = deg_in[v] - u64::from(g.has_edge(v, u));
                    min = min.min(dv);
                    sum += dv;
                    let cand = (min, sum);
                    if cand > current && chosen.as_ref().is_none_or(|(c, _, _)| cand > *c) {
                        chosen = Some((cand, u, v));
                    }
                }
            }
            match chosen {
                None => break,
                Some((cand, u, v)) => {
                    set.remove(u);
                    for w in g.neighbors(u).iter() {
                        deg_in[w] -= 1;
                    }
                    set.insert(v);
                    for w in g.neighbors(v).iter() {
                        deg_in[w] += 1;
                    }
                    current = cand;
                    debug_assert_eq!(current, score(&set, &deg_in));
                }
            }
        }

        let (min, sum) = current;
        let replace = match &best {
            None => true,
            Some((bm, bs, bset)) => {
                (min, sum) > (*bm, *bs) || ((min, sum) == (*bm, *bs) && set < *bset)
            }
        };
        if replace {
            best = Some((min, sum, set));
        }
    }
    let (min, _, set) = best.expect("at least one start");
    debug_assert_eq!(g.min_degree_within(&set), Some(min));
    (set, min)
}

/// Runs the full constructive pipeline and returns a certificate whose
/// `verified` flag always reflects a fresh recomputation on the input graph.
pub fn quasi_ramsey_extract(
    g: &Graph,
    k: usize,
    params: &PipelineParams,
) -> Result<Certificate, PipelineError> {
    if k < 2 {
        return Err(PipelineError::KTooSmall { k });
    }
    let n = g.n();
    if n < k {
        return Err(PipelineError::GraphTooSmall { n, k });
    }

    let comp = complement(g);
    let side_graph = |side: GraphSide| -> &Graph {
        match side {
            GraphSide::Original => g,
            GraphSide::Complement => &comp,
        }
    };
    let input_hash = format!("{:016x}", fnv1a64(emit_graph6(g).as_bytes()));
    let target = target_value(params.target_kind, n, k);
    let finish = |side: GraphSide,
                  subset: &VertexSet,
                  achieved: u64,
                  trace: CertTrace|
     -> Certificate {
        Certificate {
            version: CERTIFICATE_VERSION,
            input_hash: input_hash.clone(),
            side,
            k,
            vertices: subset.to_vec(),
            achieved,
            target,
            target_kind: params.target_kind,
            verified: degree_meets(achieved, target),
            params: ParamsRecord::from_params(params),
            trace,
        }
    };

    let mut trace = CertTrace {
        fallback: "none".to_string(),
        ..CertTrace::default()
    };
    let mut best_partial: Option<Candidate> = None;

    // Small-k escape: with k at most half the bit-length of n, a clique or
    // coclique of order k exists classically and a pruned search is cheap.
    if 2.0 * k as f64 <= (n as f64).log2() {
        if let Ok(Some((set, kind))) = homogeneous_set_search(g, k) {
            let side = kind.side();
            let achieved = side_graph(side)
                .min_degree_within(&set)
                .expect("k >= 2 vertices");
            trace.homogeneous = Some(HomogeneousTrace {
                side,
                vertices: set.to_vec(),
            });
            let cert = finish(side, &set, achieved, trace.clone());
            if cert.verified {
                return Ok(cert);
            }
            best_partial = Some(Candidate {
                side,
                subset: set,
                achieved,
                stages: StageTraces::default(),
                extraction: None,
            });
        }
    }

    // Extraction ladder: target order 2k so the split arithmetic applies;
    // smaller verified candidates (order in [k, 2k)) route straight to
    // thinning.
    for nu in nu_ladder(g, params) {
        trace.attempts.push(nu);
        let search = variable_quasi_ramsey(g, 2 * k, nu, params.mode, params.seed)?;
        let res = match &search.outcome {
            VariableOutcome::Found(r) => Some(r.clone()),
            VariableOutcome::NotFound { best } => {
                best.as_ref().filter(|b| b.order >= k).cloned()
            }
        };
        let Some(res) = res else { continue };
        let ext_trace = extraction_trace(&res, nu, &search);
        trace.extraction = Some(ext_trace.clone());

        let sg = side_graph(res.side);
        for (subset, stages) in run_stages(sg, &res, k, nu, params) {
            let achieved = sg.min_degree_within(&subset).expect("k >= 2 vertices");
            let cand = Candidate {
                side: res.side,
                subset,
                achieved,
                stages,
                extraction: Some(ext_trace.clone()),
            };
            if degree_meets(achieved, target) {
                trace.split = cand.stages.split;
                trace.thinning = cand.stages.thinning;
                trace.halving = cand.stages.halving;
                return Ok(finish(cand.side, &cand.subset, achieved, trace));
            }
            if best_partial
                .as_ref()
                .is_none_or(|b| better_candidate(&cand, b))
            {
                best_partial = Some(cand);
            }
        }
    }

    // Fallback: exhaustive when enumerable, otherwise a seeded greedy search.
    if params.fallback_enabled {
        if subset_count(n, k) <= SUBSET_GUARD {
            let mut chosen: Option<Candidate> = None;
            for side in [GraphSide::Original, GraphSide::Complement] {
                if let Ok(Some((set, value))) = best_min_degree_subset(side_graph(side), k) {
                    let cand = Candidate {
                        side,
                        subset: set,
                        achieved: value,
                        stages: StageTraces::default(),
                        extraction: None,
                    };
                    if chosen.as_ref().is_none_or(|c| better_candidate(&cand, c)) {
                        chosen = Some(cand);
                    }
                }
            }
            let cand = chosen.expect("n >= k guarantees a subset");
            trace.fallback = "exhaustive".to_string();
            trace.split = None;
            trace.thinning = None;
            trace.halving = None;
            return Ok(finish(cand.side, &cand.subset, cand.achieved, trace));
        }
        let mut chosen: Option<Candidate> = None;
        for side in [GraphSide::Original, GraphSide::Complement] {
            let (set, value) = heuristic_min_degree_subset(
                side_graph(side),
                k,
                rng::derive_seed(params.seed, 0xfa11),
                16,
            );
            let cand = Candidate {
                side,
                subset: set,
                achieved: value,
                stages: StageTraces::default(),
                extraction: None,
            };
            if chosen.as_ref().is_none_or(|c| better_candidate(&cand, c)) {
                chosen = Some(cand);
            }
        }
        let cand = chosen.expect("both sides searched");
        if degree_meets(cand.achieved, target) {
            trace.fallback = "heuristic".to_string();
            trace.split = None;
            trace.thinning = None;
            trace.halving = None;
            return Ok(finish(cand.side, &cand.subset, cand.achieved, trace));
        }
        if best_partial
            .as_ref()
            .is_none_or(|b| better_candidate(&cand, b))
        {
            best_partial = Some(cand);
            trace.fallback = "heuristic".to_string();
        }
    }

    // Honest failure: report the best candidate seen (or the first k
    // vertices when nothing was ever produced), verified honestly.
    let cand = best_partial.unwrap_or_else(|| {
        let subset = VertexSet::from_indices(n, 0..k).expect("k <= n");
        let achieved = g.min_degree_within(&subset).expect("k >= 2");
        Candidate {
            side: GraphSide::Original,
            subset,
            achieved,
            stages: StageTraces::default(),
            extraction: None,
        }
    });
    if let Some(ext) = cand.extraction {
        trace.extraction = Some(ext);
    }
    trace.split = cand.stages.split;
    trace.thinning = cand.stages.thinning;
    trace.halving = cand.stages.halving;
    Ok(finish(cand.side, &cand.subset, cand.achieved, trace))
}

/// Independent checker: recomputes the induced minimum degree on the claimed
/// side (complement-side degrees computed directly as `(k-1) - deg`, without
/// materializing the complement) and compares against the recomputed target.
/// Shares only graph-core primitives with the producer.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<bool, PipelineError> {
    if cert.vertices.len() != cert.k {
        return Err(PipelineError::Malformed {
            reason: format!(
                "vertex list has {} entries for k = {}",
                cert.vertices.len(),
                cert.k
            ),
        });
    }
    let subset = VertexSet::from_indices(g.n(), cert.vertices.iter().copied()).map_err(|e| {
        PipelineError::Malformed {
            reason: e.to_string(),
        }
    })?;
    if subset.len() != cert.k {
        return Err(PipelineError::Malformed {
            reason: "vertex list contains duplicates".to_string(),
        });
    }
    let target = target_value(cert.target_kind, g.n(), cert.k);
    if (target - cert.target).abs() > 1e-9 {
        return Err(PipelineError::Malformed {
            reason: format!(
                "certificate target {} does not match recomputed target {target}",
                cert.target
            ),
        });
    }
    let achieved = subset
        .iter()
        .map(|v| {
            let within = g.degree_within(v, &subset);
            match cert.side {
                GraphSide::Original => within,
                GraphSide::Complement => (cert.k as u64 - 1) - within,
            }
        })
        .min()
        .expect("k >= 1");
    Ok(degree_meets(achieved, target))
}
