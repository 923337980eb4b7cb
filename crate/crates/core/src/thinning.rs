//! Shrinking a dense graph to exactly `k` vertices.
//!
//! For a graph on `l = Pk` vertices with `delta >= l/2 + eta sqrt(l)`, track
//! the full vertex set and the neighbourhoods of all but the last vertex,
//! and ask proportional selection for a `p = (k + 1 + 6 sqrt(l))/l` fraction
//! of each. The selected set `Y` lands near `k + 1` vertices while every
//! tracked neighbourhood keeps close to its `p`-share; trimming `Y` down to
//! a `k`-set `Z` that avoids the untracked last vertex costs each remaining
//! vertex at most `|Y| - k` neighbours. The certified guarantee is
//! `k/2 + (eta_eff / sqrt(P)) sqrt(k) - beta_hat - removed`, replaying that
//! arithmetic with the realized deviation `beta_hat` and the exact removed
//! count instead of worst-case figures. When `p > 1` the selection is
//! skipped and the highest-labelled `l - k` vertices are deleted outright,
//! which costs each survivor at most `l - k` neighbours.

use crate::discrepancy::{select_proportional, ColoringBackend, DiscError, SetSystem};
use crate::graph::{Graph, VertexSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum ThinError {
    KTooLarge { k: usize, l: usize },
    KZero,
    /// The selection came back too small to carve a k-set avoiding the last
    /// vertex; callers should treat this as a stage failure.
    SelectionTooSmall { selected: usize, k: usize },
    Disc(DiscError),
}

impl fmt::Display for ThinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThinError::KTooLarge { k, l } => write!(f, "k = {k} exceeds the graph order {l}"),
            ThinError::KZero => write!(f, "k must be at least 1"),
            ThinError::SelectionTooSmall { selected, k } => {
                write!(f, "selection of {selected} vertices cannot supply a {k}-set")
            }
            ThinError::Disc(e) => write!(f, "coloring backend failed: {e}"),
        }
    }
}

impl std::error::Error for ThinError {}

impl From<DiscError> for ThinError {
    fn from(e: DiscError) -> Self {
        ThinError::Disc(e)
    }
}

/// Full account of one thinning run.
#[derive(Clone, Debug)]
pub struct ThinningReport {
    /// Selection probability `(k + 1 + beta_target) / l`.
    pub p: f64,
    /// The backend's target deviation for this ground size (`6 sqrt(l)`).
    pub beta_target: f64,
    /// False when `p > 1` forced the plain deletion branch.
    pub selection_ran: bool,
    /// The selected set `Y` (the full vertex set in the deletion branch).
    pub y: VertexSet,
    /// Realized deviation `beta_hat`, recomputed exactly from `Y`
    /// (0 in the deletion branch).
    pub realized_deviation: f64,
    /// `|Y| - k`: how many vertices were trimmed after selection.
    pub removed_from_y: usize,
    /// The final `k`-set.
    pub z: VertexSet,
    /// `delta(G[Z])`, recomputed.
    pub achieved_min_degree: u64,
    /// `(delta(G) - l/2) / sqrt(l)`, the measured surplus coefficient.
    pub eta_effective: f64,
    /// `delta(G) >= l/2 + eta sqrt(l)` for some positive eta.
    pub hypothesis_met: bool,
    /// Certified lower bound on the achieved minimum degree, claimed only
    /// when the hypothesis held. Selection branch:
    /// `k/2 + (eta_eff/sqrt(P)) sqrt(k) - beta_hat - removed`; deletion
    /// branch: `delta(G) - (l - k)`.
    pub guarantee_with_beta: Option<f64>,
    /// Result of [`size_window_check`] (true when no selection ran).
    pub window_ok: bool,
}

/// `|Y|` must land in the window `p*l ± beta_hat`, i.e.
/// `k + 1 + beta_target - beta_hat <= |Y| <= k + 1 + beta_target + beta_hat`;
/// with `beta_hat` at the target this is the classical
/// `k + 1 <= |Y| <= k + 1 + 2 beta_hat` window. By construction of
/// `beta_hat` this can only fail on an accounting bug, which is exactly what
/// an internal assertion is for.
pub fn size_window_check(y_len: usize, k: usize, beta_target: f64, beta_hat: f64) -> bool {
    let y = y_len as f64;
    let center = k as f64 + 1.0 + beta_target;
    y >= center - beta_hat - 1e-9 && y <= center + beta_hat + 1e-9
}

/// Thins `h` (on `l >= k >= 1` vertices) to exactly `k` vertices.
///
/// Tracked sets: the full vertex set, then the neighbourhood of each vertex
/// except the last. `Z` is the lexicographically first `k`-subset of
/// `Y \ {last vertex}` (selection branch) or the first `k` vertices
/// (deletion branch). All deterministic choices are lexicographic.
pub fn thin_to_k(
    h: &Graph,
    k: usize,
    backend: &dyn ColoringBackend,
    bits: u32,
) -> Result<ThinningReport, ThinError> {
    let l = h.n();
    if k == 0 {
        return Err(ThinError::KZero);
    }
    if k > l {
        return Err(ThinError::KTooLarge { k, l });
    }

    let delta = h.min_degree().expect("l >= 1");
    let eta_effective = (delta as f64 - l as f64 / 2.0) / (l as f64).sqrt();
    let hypothesis_met = eta_effective > 0.0;
    let p_ratio = l as f64 / k as f64;

    let beta_target = backend.target_deviation(l);
    let p = (k as f64 + 1.0 + beta_target) / l as f64;

    if p > 1.0 {
        // Deleting the last l - k vertices costs each survivor at most
        // l - k neighbours.
        let z = VertexSet::from_indices(l, 0..k).expect("k <= l");
        let achieved = h.min_degree_within(&z).expect("k >= 1");
        let guarantee = if hypothesis_met {
            Some(delta as f64 - (l - k) as f64)
        } else {
            None
        };
        return Ok(ThinningReport {
            p,
            beta_target,
            selection_ran: false,
            y: VertexSet::full(l),
            realized_deviation: 0.0,
            removed_from_y: l - k,
            z,
            achieved_min_degree: achieved,
            eta_effective,
            hypothesis_met,
            guarantee_with_beta: guarantee,
            window_ok: true,
        });
    }

    // Tracked sets: A_0 = V, then N(v) for every vertex except the last.
    let mut sets = Vec::with_capacity(l);
    sets.push(VertexSet::full(l));
    for v in 0..l - 1 {
        sets.push(h.neighbors(v));
    }
    let system = SetSystem::new(l, sets).expect("sets over [l)");
    let selection = select_proportional(&system, p, backend, bits)?;
    let y = selection.selected;
    let beta_hat = selection.deviation;

    let mut candidates = y.clone();
    if l >= 1 {
        let last = l - 1;
        if candidates.contains(last) {
            candidates.remove(last);
        }
    }
    if candidates.len() < k {
        return Err(ThinError::SelectionTooSmall {
            selected: y.len(),
            k,
        });
    }
    let z = VertexSet::from_indices(l, candidates.iter().take(k)).expect("subset of [l)");
    let removed_from_y = y.len() - k;
    let achieved = h.min_degree_within(&z).expect("k >= 1");
    let guarantee = if hypothesis_met {
        Some(
            k as f64 / 2.0 + eta_effective / p_ratio.sqrt() * (k as f64).sqrt()
                - beta_hat
                - removed_from_y as f64,
        )
    } else {
        None
    };
    let window_ok = size_window_check(y.len(), k, beta_target, beta_hat);

    Ok(ThinningReport {
        p,
        beta_target,
        selection_ran: true,
        y,
        realized_deviation: beta_hat,
        removed_from_y,
        z,
        achieved_min_degree: achieved,
        eta_effective,
        hypothesis_met,
        guarantee_with_beta: guarantee,
        window_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::ExactBackend;
    use crate::graph::{complement, sample_gnp, Graph};

    #[test]
    fn complete_graph_any_branch_is_fine() {
        let g = Graph::complete(12).unwrap();
        let r = thin_to_k(&g, 5, &ExactBackend::default(), 20).unwrap();
        assert_eq!(r.z.len(), 5);
        assert_eq!(r.achieved_min_degree, 4);
        if let Some(gu) = r.guarantee_with_beta {
            assert!(r.achieved_min_degree as f64 >= gu - 1e-9);
        }
    }

    #[test]
    fn l_equals_k_returns_everything() {
        // p = (k + 1 + 6 sqrt(k))/k > 1 always: degenerate deletion branch.
        let g = Graph::complete(6).unwrap();
        let r = thin_to_k(&g, 6, &ExactBackend::default(), 20).unwrap();
        assert!(!r.selection_ran);
        assert_eq!(r.z.len(), 6);
        assert_eq!(r.removed_from_y, 0);
        assert!(r.window_ok);
    }

    #[test]
    fn dense_random_instance_keeps_its_guarantee() {
        // delta(G(40, 0.9)) comfortably exceeds 20, so the hypothesis holds.
        let g = sample_gnp(40, 0.9, 5).unwrap();
        let r = thin_to_k(&g, 16, &ExactBackend::default(), 20).unwrap();
        assert!(r.hypothesis_met);
        assert_eq!(r.z.len(), 16);
        let recomputed = g.min_degree_within(&r.z).unwrap();
        assert_eq!(recomputed, r.achieved_min_degree);
        if let Some(gu) = r.guarantee_with_beta {
            assert!(
                r.achieved_min_degree as f64 >= gu - 1e-9,
                "achieved {} below guarantee {gu}",
                r.achieved_min_degree
            );
        }
    }

    #[test]
    fn last_vertex_never_selected_when_l_exceeds_k() {
        for seed in 0..10u64 {
            let g = complement(&sample_gnp(18, 0.15, seed).unwrap());
            for k in [3usize, 5, 9] {
                let r = thin_to_k(&g, k, &ExactBackend::default(), 20).unwrap();
                assert_eq!(r.z.len(), k);
                assert!(!r.z.contains(17), "seed {seed} k {k} kept the last vertex");
                assert!(r.z.is_subset_of(&r.y) || !r.selection_ran);
                assert!(r.window_ok || !r.selection_ran);
            }
        }
    }

    #[test]
    fn guarantee_holds_whenever_claimed() {
        for seed in 0..20u64 {
            // Dense graphs so the hypothesis usually holds.
            let g = complement(&sample_gnp(20, 0.2, seed).unwrap());
            for k in [4usize, 8, 13] {
                let r = thin_to_k(&g, k, &ExactBackend::default(), 20).unwrap();
                if let Some(gu) = r.guarantee_with_beta {
                    assert!(
                        r.achieved_min_degree as f64 >= gu - 1e-9,
                        "seed {seed} k {k}: achieved {} < guarantee {gu}",
                        r.achieved_min_degree
                    );
                }
            }
        }
    }

    #[test]
    fn window_examples() {
        // beta_hat at zero with a zero target pins |Y| = k + 1 exactly.
        assert!(size_window_check(6, 5, 0.0, 0.0));
        assert!(!size_window_check(7, 5, 0.0, 0.0));
        // Classical shape: [k+1, k+1+2b] when beta_hat == beta_target.
        assert!(size_window_check(10, 5, 2.0, 2.0));
        assert!(size_window_check(5 + 1 + 4, 5, 2.0, 2.0));
        assert!(!size_window_check(5 + 1 + 5, 5, 2.0, 2.0));
    }

    #[test]
    fn rejects_bad_k() {
        let g = Graph::complete(4).unwrap();
        assert!(matches!(
            thin_to_k(&g, 5, &ExactBackend::default(), 20),
            Err(ThinError::KTooLarge { .. })
        ));
        assert!(matches!(
            thin_to_k(&g, 0, &ExactBackend::default(), 20),
            Err(ThinError::KZero)
        ));
    }
}
