//! End-to-end (2m+1,m)-list-colouring of the supported theta families.
//!
//! Even thetas Θ_{2r,2s,2t} (r,s,t ≥ 2) are solved directly: trim the hub
//! lists to 2m colours, validate the C conditions, pick a damage-bounded
//! pair (S,T), put S on u and T on v, and extend along each internal path.
//! Odd thetas Θ_{2r+1,2s+1,2t+1} reduce to the even case by splitting hub
//! u into three degree-1 copies attached to a fresh hub, which bumps every
//! path length by one; the copies are forced to share one colour set, so
//! the colouring pulls back. Θ_{2,2,2,2p} runs the four-path variant with
//! untrimmed (2m+1)-lists. Everything else falls back to the brute-force
//! oracle, and every colouring is re-verified before it is returned.

use serde::Serialize;
use thiserror::Error;

use crate::lists::{verify_coloring, ColorSet, FoldColoring, ListAssignment};
use crate::oracle::{self, OracleError};
use crate::pairs::{self, PairError};
use crate::path;
use crate::theta::ThetaGraph;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("unsupported theta shape: {0}")]
    Shape(String),
    #[error("list size violation: {0}")]
    ListSize(String),
    #[error("conditions failed on a shape they should hold for: {0}")]
    ConditionsNotMet(String),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no colouring exists for this instance")]
    NoColoring,
    #[error("internal error: {0}")]
    Internal(String),
}

/// How the colouring was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certificate {
    TheoremGuided,
    Oracle,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub coloring: FoldColoring,
    pub certificate: Certificate,
}

/// Record of the hub-splitting reduction for odd thetas.
#[derive(Debug, Clone)]
pub struct SplitMap {
    pub original_lengths: Vec<usize>,
    pub hub_list: ColorSet,
    pub fold: usize,
}

fn trimmed(list: &ColorSet, keep: usize) -> ColorSet {
    // drop the lexicographically largest colours
    list.iter().take(keep).copied().collect()
}

fn list_len(lists: &ListAssignment, v: &str) -> Result<usize, SolveError> {
    lists
        .get(v)
        .map(|l| l.len())
        .ok_or_else(|| SolveError::ListSize(format!("missing list for {v}")))
}

fn require_path_sizes(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    head_min: usize,
    tail_min: usize,
    interior_min: usize,
) -> Result<(), SolveError> {
    for i in 0..theta.path_count() {
        let names = theta.internal_path(i);
        let n = names.len();
        for (j, v) in names.iter().enumerate() {
            let len = list_len(lists, v)?;
            let min = if n == 1 {
                head_min.max(tail_min)
            } else if j == 0 {
                head_min
            } else if j == n - 1 {
                tail_min
            } else {
                interior_min
            };
            if len < min {
                return Err(SolveError::ListSize(format!(
                    "{v} has {len} colours, needs at least {min}"
                )));
            }
        }
    }
    Ok(())
}

/// Colour the internal paths once S and T are fixed on the hubs.
fn extend_along_paths(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
    s: &ColorSet,
    t: &ColorSet,
) -> Result<FoldColoring, SolveError> {
    let mut phi = FoldColoring::new(m);
    phi.set("u", s.clone());
    phi.set("v", t.clone());
    for i in 0..theta.path_count() {
        let names = theta.internal_path(i);
        let path_lists: Vec<ColorSet> = names
            .iter()
            .map(|v| {
                lists
                    .get(v)
                    .cloned()
                    .ok_or_else(|| SolveError::ListSize(format!("missing list for {v}")))
            })
            .collect::<Result<_, _>>()?;
        let reduced = path::reduce_lists(&path_lists, s, t);
        let colored = path::color_path(&reduced, m)
            .map_err(|e| SolveError::Internal(format!("path {i}: {e}")))?
            .ok_or_else(|| {
                SolveError::Internal(format!(
                    "path {i} not colourable although its damage was within budget"
                ))
            })?;
        for (v, set) in names.iter().zip(colored) {
            phi.set(v, set);
        }
    }
    Ok(phi)
}

fn verified(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
    phi: FoldColoring,
) -> Result<FoldColoring, SolveError> {
    let report = verify_coloring(&theta.to_graph(), lists, m, &phi);
    if !report.is_valid() {
        return Err(SolveError::Internal(format!(
            "produced colouring failed verification: {:?}",
            report.violations
        )));
    }
    Ok(phi)
}

/// Θ_{2r,2s,2t} with r,s,t ≥ 2: hubs may carry 2m-lists (as may the
/// vertices next to u), everything else needs 2m+1.
pub fn solve_even_theta(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
) -> Result<FoldColoring, SolveError> {
    let lengths = theta.lengths();
    if lengths.len() != 3 || lengths.iter().any(|&k| k % 2 != 0 || k < 4) {
        return Err(SolveError::Shape(format!(
            "need three even lengths >= 4, got {lengths:?}"
        )));
    }
    if list_len(lists, "u")? < 2 * m || list_len(lists, "v")? < 2 * m {
        return Err(SolveError::ListSize(format!(
            "hub lists need at least 2m = {} colours",
            2 * m
        )));
    }
    require_path_sizes(theta, lists, 2 * m, 2 * m + 1, 2 * m + 1)?;

    let mut working = lists.clone();
    working.set("u", trimmed(lists.get("u").unwrap(), 2 * m));
    working.set("v", trimmed(lists.get("v").unwrap(), 2 * m));

    let (ell, tau) = (2 * m, 0);
    let report = pairs::check_conditions_c(theta, &working, ell, tau, m)?;
    if !report.all_hold() {
        return Err(SolveError::ConditionsNotMet(format!("{report:?}")));
    }
    let ctx = pairs::ThetaContext::build(theta, &working)?;
    let index = pairs::consistent_indexing(&ctx.lu, &ctx.lv)?;
    let budgets = ctx.budgets(m);
    let pair = pairs::find_pair(&ctx, &index, m - tau, &budgets, true)?
        .expect("find_pair reports falsification instead of None when conditions hold");
    let phi = extend_along_paths(theta, &working, m, &pair.s, &pair.t)?;
    verified(theta, lists, m, phi)
}

/// Split hub u of an odd theta into three degree-1 vertices plus a fresh
/// hub. The hub list must already be trimmed to 2m colours.
pub fn split_odd_theta(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
) -> Result<(ThetaGraph, ListAssignment, SplitMap), SolveError> {
    let lengths = theta.lengths();
    if lengths.len() != 3 || lengths.iter().any(|&k| k % 2 == 0 || k < 3) {
        return Err(SolveError::Shape(format!(
            "need three odd lengths >= 3, got {lengths:?}"
        )));
    }
    let hub = lists
        .get("u")
        .ok_or_else(|| SolveError::ListSize("missing list for u".into()))?;
    if hub.len() != 2 * m {
        return Err(SolveError::ListSize(format!(
            "hub list must be trimmed to exactly 2m = {} colours, has {}",
            2 * m,
            hub.len()
        )));
    }
    let split_lengths: Vec<usize> = lengths.iter().map(|&k| k + 1).collect();
    let split_theta = ThetaGraph::new(split_lengths).expect("shifted lengths stay valid");
    let mut split_lists = ListAssignment::default();
    split_lists.set("u", hub.clone());
    split_lists.set(
        "v",
        lists
            .get("v")
            .ok_or_else(|| SolveError::ListSize("missing list for v".into()))?
            .clone(),
    );
    for i in 0..3 {
        split_lists.set(&format!("p{i}_1"), hub.clone());
        for (j, v) in theta.internal_path(i).iter().enumerate() {
            let l = lists
                .get(v)
                .ok_or_else(|| SolveError::ListSize(format!("missing list for {v}")))?;
            split_lists.set(&format!("p{i}_{}", j + 2), l.clone());
        }
    }
    let map = SplitMap {
        original_lengths: lengths.to_vec(),
        hub_list: hub.clone(),
        fold: m,
    };
    Ok((split_theta, split_lists, map))
}

/// Undo the split: the three hub copies are forced onto the complement of
/// the fresh hub's colours, so they agree and become φ(u).
pub fn pull_back_coloring(
    split_phi: &FoldColoring,
    map: &SplitMap,
) -> Result<FoldColoring, SolveError> {
    let hub_choice = split_phi
        .get("u")
        .ok_or_else(|| SolveError::Internal("split colouring misses the fresh hub".into()))?;
    let forced: ColorSet = map.hub_list.difference(hub_choice).copied().collect();
    for i in 0..3 {
        let copy = split_phi
            .get(&format!("p{i}_1"))
            .ok_or_else(|| SolveError::Internal(format!("split colouring misses p{i}_1")))?;
        if *copy != forced {
            return Err(SolveError::Internal(format!(
                "hub copy p{i}_1 holds {copy:?}, expected the forced complement {forced:?}"
            )));
        }
    }
    let mut phi = FoldColoring::new(map.fold);
    phi.set("u", forced);
    phi.set(
        "v",
        split_phi
            .get("v")
            .ok_or_else(|| SolveError::Internal("split colouring misses v".into()))?
            .clone(),
    );
    for (i, &k) in map.original_lengths.iter().enumerate() {
        for j in 1..k {
            let from = format!("p{i}_{}", j + 1);
            let set = split_phi
                .get(&from)
                .ok_or_else(|| SolveError::Internal(format!("split colouring misses {from}")))?;
            phi.set(&format!("p{i}_{j}"), set.clone());
        }
    }
    Ok(phi)
}

fn solve_odd_theta(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
) -> Result<FoldColoring, SolveError> {
    if list_len(lists, "u")? < 2 * m || list_len(lists, "v")? < 2 * m {
        return Err(SolveError::ListSize(format!(
            "hub lists need at least 2m = {} colours",
            2 * m
        )));
    }
    require_path_sizes(theta, lists, 2 * m + 1, 2 * m + 1, 2 * m + 1)?;
    let mut working = lists.clone();
    working.set("u", trimmed(lists.get("u").unwrap(), 2 * m));
    working.set("v", trimmed(lists.get("v").unwrap(), 2 * m));
    let (split_theta, split_lists, map) = split_odd_theta(theta, &working, m)?;
    let split_phi = solve_even_theta(&split_theta, &split_lists, m)?;
    let phi = pull_back_coloring(&split_phi, &map)?;
    verified(theta, lists, m, phi)
}

/// Θ_{2,2,2,2p} with every list of size ≥ 2m+1. The theta must have the
/// long path last; `solve` normalizes the order before calling this.
pub fn solve_generalized_theta4(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
) -> Result<FoldColoring, SolveError> {
    let lengths = theta.lengths();
    let shape_ok = lengths.len() == 4
        && lengths[..3].iter().all(|&k| k == 2)
        && lengths[3] % 2 == 0
        && lengths[3] >= 2;
    if !shape_ok {
        return Err(SolveError::Shape(format!(
            "need lengths [2,2,2,2p], got {lengths:?}"
        )));
    }
    if list_len(lists, "u")? < 2 * m + 1 || list_len(lists, "v")? < 2 * m + 1 {
        return Err(SolveError::ListSize(format!(
            "hub lists need at least 2m+1 = {} colours",
            2 * m + 1
        )));
    }
    require_path_sizes(theta, lists, 2 * m + 1, 2 * m + 1, 2 * m + 1)?;

    let mut working = lists.clone();
    working.set("u", trimmed(lists.get("u").unwrap(), 2 * m + 1));
    working.set("v", trimmed(lists.get("v").unwrap(), 2 * m + 1));

    let (ell, tau) = (2 * m + 1, 0);
    let report = pairs::check_conditions_t(theta, &working, ell, tau, m)?;
    if !report.all_hold() {
        return Err(SolveError::ConditionsNotMet(format!("{report:?}")));
    }
    let ctx = pairs::ThetaContext::build(theta, &working)?;
    let index = pairs::consistent_indexing(&ctx.lu, &ctx.lv)?;
    let budgets = ctx.budgets(m);
    let pair = pairs::find_pair(&ctx, &index, m - tau, &budgets, true)?
        .expect("find_pair reports falsification instead of None when conditions hold");
    let phi = extend_along_paths(theta, &working, m, &pair.s, &pair.t)?;
    verified(theta, lists, m, phi)
}

/// Dispatch by family. Shapes outside the three theorem families fall
/// back to the oracle so the solver stays total over theta inputs.
pub fn solve(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    m: usize,
) -> Result<SolveOutcome, SolveError> {
    let lengths = theta.lengths();
    let three = lengths.len() == 3;
    if three && lengths.iter().all(|&k| k % 2 == 0 && k >= 4) {
        let coloring = solve_even_theta(theta, lists, m)?;
        return Ok(SolveOutcome {
            coloring,
            certificate: Certificate::TheoremGuided,
        });
    }
    if three && lengths.iter().all(|&k| k % 2 == 1 && k >= 3) {
        let coloring = solve_odd_theta(theta, lists, m)?;
        return Ok(SolveOutcome {
            coloring,
            certificate: Certificate::TheoremGuided,
        });
    }
    if lengths.len() == 4
        && lengths.iter().filter(|&&k| k == 2).count() >= 3
        && lengths.iter().all(|&k| k % 2 == 0)
    {
        // rotate the long path (if any) to the last slot
        let long_pos = lengths
            .iter()
            .position(|&k| k != 2)
            .unwrap_or(lengths.len() - 1);
        let mut order: Vec<usize> = (0..4).filter(|&i| i != long_pos).collect();
        order.push(long_pos);
        let permuted_lengths: Vec<usize> = order.iter().map(|&i| lengths[i]).collect();
        let permuted = ThetaGraph::new(permuted_lengths).expect("permutation keeps the shape");
        let mut permuted_lists = ListAssignment::default();
        for (slot, &orig) in order.iter().enumerate() {
            for (j, v) in theta.internal_path(orig).iter().enumerate() {
                if let Some(l) = lists.get(v) {
                    permuted_lists.set(&format!("p{slot}_{}", j + 1), l.clone());
                }
            }
        }
        for hub in ["u", "v"] {
            if let Some(l) = lists.get(hub) {
                permuted_lists.set(hub, l.clone());
            }
        }
        let permuted_phi = solve_generalized_theta4(&permuted, &permuted_lists, m)?;
        let mut phi = FoldColoring::new(m);
        for hub in ["u", "v"] {
            phi.set(hub, permuted_phi.get(hub).unwrap().clone());
        }
        for (slot, &orig) in order.iter().enumerate() {
            for (j, v) in theta.internal_path(orig).iter().enumerate() {
                phi.set(
                    v,
                    permuted_phi
                        .get(&format!("p{slot}_{}", j + 1))
                        .expect("permuted colouring covers the permuted graph")
                        .clone(),
                );
            }
        }
        let coloring = verified(theta, lists, m, phi)?;
        return Ok(SolveOutcome {
            coloring,
            certificate: Certificate::TheoremGuided,
        });
    }

    // Prior-work families and anything else: brute force.
    let graph = theta.to_graph();
    match oracle::find_lb_coloring(&graph, lists, m, oracle::DEFAULT_NODE_BUDGET)? {
        Some(coloring) => {
            let coloring = verified(theta, lists, m, coloring)?;
            Ok(SolveOutcome {
                coloring,
                certificate: Certificate::Oracle,
            })
        }
        None => Err(SolveError::NoColoring),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::color_set;
    use crate::theta::build_theta;

    fn uniform(theta: &ThetaGraph, colors: &[u32]) -> ListAssignment {
        let mut l = ListAssignment::default();
        for v in theta.to_graph().vertices() {
            l.set(v, colors.iter().copied().collect());
        }
        l
    }

    #[test]
    fn even_theta_equal_lists() {
        let theta = build_theta(vec![4, 4, 4]).unwrap();
        for m in 1..=2usize {
            let colors: Vec<u32> = (1..=(2 * m + 1) as u32).collect();
            let lists = uniform(&theta, &colors);
            solve_even_theta(&theta, &lists, m).unwrap();
        }
    }

    #[test]
    fn even_theta_rejects_small_hub() {
        let theta = build_theta(vec![4, 4, 4]).unwrap();
        let mut lists = uniform(&theta, &[1, 2, 3]);
        lists.set("u", color_set([1])); // 2m - 1 = 1 colour for m = 1
        assert!(matches!(
            solve_even_theta(&theta, &lists, 1),
            Err(SolveError::ListSize(_))
        ));
    }

    #[test]
    fn split_shapes() {
        let theta = build_theta(vec![3, 3, 3]).unwrap();
        let mut lists = uniform(&theta, &[1, 2, 3]);
        lists.set("u", color_set([1, 2]));
        let (split, split_lists, _) = split_odd_theta(&theta, &lists, 1).unwrap();
        assert_eq!(split.lengths(), &[4, 4, 4]);
        assert_eq!(
            split.to_graph().vertex_count(),
            theta.to_graph().vertex_count() + 3
        );
        assert_eq!(split_lists.get("p0_1").unwrap(), &color_set([1, 2]));
        assert_eq!(split_lists.get("p0_2").unwrap(), &color_set([1, 2, 3]));

        let theta = build_theta(vec![5, 3, 3]).unwrap();
        let mut lists = uniform(&theta, &[1, 2, 3]);
        lists.set("u", color_set([1, 2]));
        let (split, _, _) = split_odd_theta(&theta, &lists, 1).unwrap();
        assert_eq!(split.lengths(), &[6, 4, 4]);

        let theta = build_theta(vec![3, 4, 5]).unwrap();
        let lists = uniform(&theta, &[1, 2, 3]);
        assert!(matches!(
            split_odd_theta(&theta, &lists, 1),
            Err(SolveError::Shape(_))
        ));
    }

    #[test]
    fn split_requires_trimmed_hub() {
        let theta = build_theta(vec![3, 3, 3]).unwrap();
        let lists = uniform(&theta, &[1, 2, 3]);
        assert!(matches!(
            split_odd_theta(&theta, &lists, 1),
            Err(SolveError::ListSize(_))
        ));
    }

    #[test]
    fn pull_back_detects_tampering() {
        let theta = build_theta(vec![3, 3, 3]).unwrap();
        let mut lists = uniform(&theta, &[1, 2, 3]);
        lists.set("u", color_set([1, 2]));
        lists.set("v", color_set([1, 2]));
        let (split, split_lists, map) = split_odd_theta(&theta, &lists, 1).unwrap();
        let mut split_phi = solve_even_theta(&split, &split_lists, 1).unwrap();
        // forced complements on the hub copies
        let hub_choice = split_phi.get("u").unwrap().clone();
        let forced: ColorSet = map.hub_list.difference(&hub_choice).copied().collect();
        for i in 0..3 {
            assert_eq!(split_phi.get(&format!("p{i}_1")).unwrap(), &forced);
        }
        let ok = pull_back_coloring(&split_phi, &map).unwrap();
        assert_eq!(ok.get("u").unwrap(), &forced);
        // tamper with one copy
        split_phi.set("p1_1", hub_choice);
        assert!(matches!(
            pull_back_coloring(&split_phi, &map),
            Err(SolveError::Internal(_))
        ));
    }

    #[test]
    fn solve_odd_theta_any_lists() {
        let theta = build_theta(vec![3, 3, 3]).unwrap();
        let lists = uniform(&theta, &[4, 5, 6]);
        let out = solve(&theta, &lists, 1).unwrap();
        assert_eq!(out.certificate, Certificate::TheoremGuided);
    }

    #[test]
    fn solve_theta4_bipartite_case() {
        let theta = build_theta(vec![2, 2, 2, 2]).unwrap();
        let lists = uniform(&theta, &[1, 2, 3]);
        let out = solve(&theta, &lists, 1).unwrap();
        assert_eq!(out.certificate, Certificate::TheoremGuided);
    }

    #[test]
    fn solve_theta4_rejects_short_list() {
        let theta = build_theta(vec![2, 2, 2, 4]).unwrap();
        let mut lists = uniform(&theta, &[1, 2, 3, 4, 5]);
        lists.set("p0_1", color_set([1, 2, 3, 4])); // 2m with m = 2
        assert!(matches!(
            solve_generalized_theta4(&theta, &lists, 2),
            Err(SolveError::ListSize(_))
        ));
    }

    #[test]
    fn solve_unordered_theta4_lengths() {
        let theta = build_theta(vec![2, 4, 2, 2]).unwrap();
        let lists = uniform(&theta, &[1, 2, 3]);
        let out = solve(&theta, &lists, 1).unwrap();
        assert_eq!(out.certificate, Certificate::TheoremGuided);
    }

    #[test]
    fn prior_work_family_uses_oracle() {
        let theta = build_theta(vec![2, 4, 4]).unwrap();
        let lists = uniform(&theta, &[1, 2, 3]);
        let out = solve(&theta, &lists, 1).unwrap();
        assert_eq!(out.certificate, Certificate::Oracle);
    }
}
