//! Residual-sequence calculus on paths.
//!
//! For a path P = (v_1, …, v_n) with lists L, the residual sets are
//! X_1 = L(v_1), X_i = L(v_i) − X_{i−1}, and S_L(P) = Σ|X_i| measures how
//! much freedom the path has. Under the size hypotheses (ends ≥ m,
//! interior ≥ 2m) the path is (L,m)-colourable exactly when S_L(P) ≥ nm.
//!
//! For odd n the calculus refines: Λ is the set of colours common to every
//! list, and the end sets X̂_1, X̂_n collect end-list colours whose first
//! (resp. last) missing position has even index. Deleting S from the head
//! list and T from the tail list then costs exactly
//! |X̂_1∩S| + |X̂_n∩T| + |Λ∩(S∪T)|, the damage of (S,T).

use thiserror::Error;

use crate::lists::{Color, ColorSet};
use crate::subsets::for_each_combination;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("path must be nonempty")]
    Empty,
    #[error("operation requires an odd number of path vertices, got {0}")]
    EvenPath(usize),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// X_1..X_n and S_L(P).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residuals {
    pub sets: Vec<ColorSet>,
    pub slp: usize,
}

/// Λ, X̂_1, X̂_n of an odd path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatSets {
    pub lambda: ColorSet,
    pub hat_head: ColorSet,
    pub hat_tail: ColorSet,
}

/// Everything the damage calculus needs about one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    pub residuals: Residuals,
    pub hats: HatSets,
}

pub fn residual_sequence(lists: &[ColorSet]) -> Result<Residuals, PathError> {
    if lists.is_empty() {
        return Err(PathError::Empty);
    }
    let mut sets: Vec<ColorSet> = Vec::with_capacity(lists.len());
    sets.push(lists[0].clone());
    for i in 1..lists.len() {
        let next: ColorSet = lists[i].difference(&sets[i - 1]).copied().collect();
        sets.push(next);
    }
    let slp = sets.iter().map(|s| s.len()).sum();
    Ok(Residuals { sets, slp })
}

pub fn slp(lists: &[ColorSet]) -> Result<usize, PathError> {
    residual_sequence(lists).map(|r| r.slp)
}

/// Λ and the parity-filtered end sets. Only defined for odd n; for n = 1
/// the convention is Λ = L(v_1) and empty end sets (a one-vertex path has
/// no even index), which keeps the closed-form damage exact.
pub fn hat_sets(lists: &[ColorSet]) -> Result<HatSets, PathError> {
    let n = lists.len();
    if n == 0 {
        return Err(PathError::Empty);
    }
    if n % 2 == 0 {
        return Err(PathError::EvenPath(n));
    }
    let lambda: ColorSet = lists.iter().skip(1).fold(lists[0].clone(), |acc, l| {
        acc.intersection(l).copied().collect()
    });
    let mut hat_head = ColorSet::new();
    for &c in lists[0].difference(&lambda) {
        // smallest 1-based index where c is missing
        let first_missing = lists.iter().position(|l| !l.contains(&c)).map(|i| i + 1);
        if let Some(i) = first_missing {
            if i % 2 == 0 {
                hat_head.insert(c);
            }
        }
    }
    let mut hat_tail = ColorSet::new();
    for &c in lists[n - 1].difference(&lambda) {
        let last_missing = lists.iter().rposition(|l| !l.contains(&c)).map(|i| i + 1);
        if let Some(i) = last_missing {
            if i % 2 == 0 {
                hat_tail.insert(c);
            }
        }
    }
    Ok(HatSets {
        lambda,
        hat_head,
        hat_tail,
    })
}

pub fn path_profile(lists: &[ColorSet]) -> Result<PathProfile, PathError> {
    Ok(PathProfile {
        residuals: residual_sequence(lists)?,
        hats: hat_sets(lists)?,
    })
}

/// L ⊖ (S,T): delete S from the head list and T from the tail list.
/// For a one-vertex path the single list loses S ∪ T.
pub fn reduce_lists(lists: &[ColorSet], s: &ColorSet, t: &ColorSet) -> Vec<ColorSet> {
    let n = lists.len();
    let mut out = lists.to_vec();
    if n == 0 {
        return out;
    }
    if n == 1 {
        out[0] = lists[0]
            .iter()
            .filter(|c| !s.contains(c) && !t.contains(c))
            .copied()
            .collect();
        return out;
    }
    out[0] = lists[0].difference(s).copied().collect();
    out[n - 1] = lists[n - 1].difference(t).copied().collect();
    out
}

/// Closed-form damage of (S,T) on an odd path, from precomputed hat sets.
pub fn damage_closed_form(hats: &HatSets, s: &ColorSet, t: &ColorSet) -> usize {
    let head = hats.hat_head.intersection(s).count();
    let tail = hats.hat_tail.intersection(t).count();
    let union_hits = hats
        .lambda
        .iter()
        .filter(|c| s.contains(c) || t.contains(c))
        .count();
    head + tail + union_hits
}

/// dam_{L,P}(S,T), computed both by definition (S_L − S_{L⊖(S,T)}) and by
/// the closed form; the two must agree exactly.
pub fn damage(lists: &[ColorSet], s: &ColorSet, t: &ColorSet) -> Result<usize, PathError> {
    let hats = hat_sets(lists)?;
    let base = slp(lists)? as i64;
    let reduced = slp(&reduce_lists(lists, s, t))? as i64;
    let definitional = base - reduced;
    let closed = damage_closed_form(&hats, s, t) as i64;
    if definitional != closed {
        return Err(PathError::Internal(format!(
            "definitional damage {definitional} != closed form {closed} for S={s:?} T={t:?}"
        )));
    }
    Ok(definitional as usize)
}

/// One check of the S_L identity report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlpIdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl SlpIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Verify, on one instance, the exact S_L decomposition and both lower
/// bounds for odd paths with uniform list sizes (|L(v_1)| = l_1 and
/// |L(v_i)| = l_2 for i ≥ 2). Hypothesis violations are reported, not
/// silently ignored.
pub fn slp_identity_check(lists: &[ColorSet]) -> Result<SlpIdentityReport, PathError> {
    let n = lists.len();
    if n < 3 || n % 2 == 0 {
        return Err(PathError::Hypothesis(format!(
            "need odd n >= 3 path vertices, got {n}"
        )));
    }
    let l1 = lists[0].len();
    let l2 = lists[1].len();
    if lists.iter().skip(1).any(|l| l.len() != l2) {
        return Err(PathError::Hypothesis(
            "lists at positions 2..n must share one size".to_owned(),
        ));
    }
    let res = residual_sequence(lists)?;
    let hats = hat_sets(lists)?;

    // Pairing consecutive residuals gives |X_{k-1}| + |X_k| = l_2 +
    // |X_{k-1} - L(v_k)| for even k, hence exactly
    //   S_L(P) = (n-1)/2 * l_2 + sum over even k < n of |X_{k-1} - L(v_k)| + |X_n|.
    let mut even_terms = 0usize;
    for k in (2..n).step_by(2) {
        // k is the 1-based even index; X_{k-1} is res.sets[k-2], L(v_k) is lists[k-1]
        even_terms += res.sets[k - 2].difference(&lists[k - 1]).count();
    }
    let decomposition = (n - 1) / 2 * l2 + even_terms + res.sets[n - 1].len();

    // Every head-set element shows up in some even term, and
    // |X_n| = |hat_tail| + |lambda|, so the decomposition bounds S_L from
    // below through the hat sets.
    let hat_bound =
        (n - 1) / 2 * l2 + hats.hat_head.len() + hats.hat_tail.len() + hats.lambda.len();
    let pair_bound = l1 + (n - 1) / 2 * l2;

    let checks = vec![
        IdentityCheck {
            name: "slp_decomposition",
            lhs: res.slp,
            rhs: decomposition,
            holds: res.slp == decomposition,
        },
        IdentityCheck {
            name: "hat_lower_bound",
            lhs: res.slp,
            rhs: hat_bound,
            holds: res.slp >= hat_bound,
        },
        IdentityCheck {
            name: "pair_lower_bound",
            lhs: res.slp,
            rhs: pair_bound,
            holds: res.slp >= pair_bound,
        },
    ];
    Ok(SlpIdentityReport { checks })
}

fn check_colorable_hypotheses(lists: &[ColorSet], m: usize) -> Result<(), PathError> {
    let n = lists.len();
    if n == 0 {
        return Err(PathError::Empty);
    }
    if lists[0].len() < m || lists[n - 1].len() < m {
        return Err(PathError::Hypothesis(format!(
            "end lists must have at least m = {m} colours"
        )));
    }
    for (i, l) in lists.iter().enumerate().take(n - 1).skip(1) {
        if l.len() < 2 * m {
            return Err(PathError::Hypothesis(format!(
                "interior list at position {} must have at least 2m = {} colours",
                i + 1,
                2 * m
            )));
        }
    }
    Ok(())
}

/// The exact colourability criterion: under the size hypotheses, the path
/// has an (L,m)-colouring iff S_L(P) ≥ nm. For n = 1 this reads
/// |L(v_1)| ≥ m.
pub fn path_colorable(lists: &[ColorSet], m: usize) -> Result<bool, PathError> {
    check_colorable_hypotheses(lists, m)?;
    Ok(slp(lists)? >= lists.len() * m)
}

/// Constructive counterpart of the criterion. Greedy left to right, at
/// each vertex preferring colours absent from the next list (lexicographic
/// tie-break); falls back to exact backtracking if the greedy pass gets
/// stuck. Returns None exactly when the criterion is false.
pub fn color_path(lists: &[ColorSet], m: usize) -> Result<Option<Vec<ColorSet>>, PathError> {
    if !path_colorable(lists, m)? {
        return Ok(None);
    }
    if let Some(chosen) = greedy_color(lists, m) {
        return Ok(Some(chosen));
    }
    if let Some(chosen) = backtrack_color(lists, m) {
        return Ok(Some(chosen));
    }
    // The criterion guarantees a colouring exists; reaching this point
    // would mean the search itself is wrong.
    Err(PathError::Internal(
        "criterion satisfied but no colouring found".to_owned(),
    ))
}

fn greedy_color(lists: &[ColorSet], m: usize) -> Option<Vec<ColorSet>> {
    let n = lists.len();
    let mut chosen: Vec<ColorSet> = Vec::with_capacity(n);
    for i in 0..n {
        let prev = if i == 0 { None } else { Some(&chosen[i - 1]) };
        let mut avail: Vec<Color> = lists[i]
            .iter()
            .filter(|c| prev.map_or(true, |p| !p.contains(c)))
            .copied()
            .collect();
        if avail.len() < m {
            return None;
        }
        if i + 1 < n {
            // colours the next list cannot use anyway go first
            avail.sort_by_key(|c| (lists[i + 1].contains(c), *c));
        }
        chosen.push(avail.into_iter().take(m).collect());
    }
    Some(chosen)
}

fn backtrack_color(lists: &[ColorSet], m: usize) -> Option<Vec<ColorSet>> {
    fn recurse(lists: &[ColorSet], m: usize, chosen: &mut Vec<ColorSet>) -> bool {
        let i = chosen.len();
        if i == lists.len() {
            return true;
        }
        let avail: Vec<Color> = lists[i]
            .iter()
            .filter(|c| i == 0 || !chosen[i - 1].contains(c))
            .copied()
            .collect();
        if avail.len() < m {
            return false;
        }
        let mut found = false;
        for_each_combination(avail.len(), m, |idx| {
            let pick: ColorSet = idx.iter().map(|&j| avail[j]).collect();
            chosen.push(pick);
            if recurse(lists, m, chosen) {
                found = true;
                return false;
            }
            chosen.pop();
            true
        });
        found
    }
    let mut chosen = Vec::new();
    if recurse(lists, m, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::color_set;

    fn lists(raw: &[&[Color]]) -> Vec<ColorSet> {
        raw.iter().map(|l| l.iter().copied().collect()).collect()
    }

    #[test]
    fn residuals_alternate_for_equal_lists() {
        let l = lists(&[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]);
        let r = residual_sequence(&l).unwrap();
        assert_eq!(r.sets[0], color_set([1, 2, 3]));
        assert_eq!(r.sets[1], ColorSet::new());
        assert_eq!(r.sets[2], color_set([1, 2, 3]));
        assert_eq!(r.slp, 6);
    }

    #[test]
    fn residuals_small_example() {
        let l = lists(&[&[1, 2], &[1, 2, 3], &[3, 4]]);
        let r = residual_sequence(&l).unwrap();
        assert_eq!(r.sets[1], color_set([3]));
        assert_eq!(r.sets[2], color_set([4]));
        assert_eq!(r.slp, 4);
    }

    #[test]
    fn residuals_single_vertex() {
        let l = lists(&[&[1, 2, 3]]);
        assert_eq!(slp(&l).unwrap(), 3);
    }

    #[test]
    fn hat_sets_parity_scan() {
        let l = lists(&[&[1, 2, 5], &[2, 3, 4], &[2, 3, 5]]);
        let h = hat_sets(&l).unwrap();
        assert_eq!(h.lambda, color_set([2]));
        assert_eq!(h.hat_head, color_set([1, 5]));
        assert_eq!(h.hat_tail, color_set([5]));
    }

    #[test]
    fn hat_sets_equal_lists_and_n1() {
        let l = lists(&[&[4, 7], &[4, 7], &[4, 7]]);
        let h = hat_sets(&l).unwrap();
        assert_eq!(h.lambda, color_set([4, 7]));
        assert!(h.hat_head.is_empty() && h.hat_tail.is_empty());

        let l = lists(&[&[1], &[2], &[1]]);
        let h = hat_sets(&l).unwrap();
        assert!(h.lambda.is_empty());
        assert_eq!(h.hat_head, color_set([1]));
        assert_eq!(h.hat_tail, color_set([1]));

        let l = lists(&[&[3, 5]]);
        let h = hat_sets(&l).unwrap();
        assert_eq!(h.lambda, color_set([3, 5]));
        assert!(h.hat_head.is_empty() && h.hat_tail.is_empty());
    }

    #[test]
    fn hat_sets_reject_even_paths() {
        let l = lists(&[&[1], &[2]]);
        assert_eq!(hat_sets(&l).unwrap_err(), PathError::EvenPath(2));
    }

    #[test]
    fn reduce_examples() {
        let l = lists(&[&[1, 2, 5], &[2, 3, 4], &[2, 3, 5]]);
        let r = reduce_lists(&l, &color_set([1]), &color_set([5]));
        assert_eq!(r, lists(&[&[2, 5], &[2, 3, 4], &[2, 3]]));
        let unchanged = reduce_lists(&l, &ColorSet::new(), &ColorSet::new());
        assert_eq!(unchanged, l);
        let single = reduce_lists(&lists(&[&[1, 2, 3]]), &color_set([1]), &color_set([2]));
        assert_eq!(single, lists(&[&[3]]));
    }

    #[test]
    fn damage_examples() {
        let l = lists(&[&[1, 2, 5], &[2, 3, 4], &[2, 3, 5]]);
        assert_eq!(slp(&l).unwrap(), 7);
        assert_eq!(damage(&l, &color_set([1]), &color_set([5])).unwrap(), 2);

        let l = lists(&[&[1], &[2], &[1]]);
        assert_eq!(damage(&l, &color_set([1]), &color_set([1])).unwrap(), 2);

        let l = lists(&[&[1, 2, 5], &[2, 3, 4], &[2, 3, 5]]);
        assert_eq!(damage(&l, &ColorSet::new(), &ColorSet::new()).unwrap(), 0);
    }

    #[test]
    fn slp_identities_on_uniform_instance() {
        let l = lists(&[&[1, 2], &[1, 2], &[1, 2], &[1, 2], &[1, 2]]);
        let report = slp_identity_check(&l).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn slp_identities_with_distinct_end_size() {
        // l_1 = 4, l_2 = 5: the decomposition has to account for the
        // asymmetric head list
        let l = lists(&[
            &[1, 2, 3, 4],
            &[1, 2, 3, 4, 5],
            &[2, 3, 4, 5, 6],
            &[1, 2, 3, 5, 7],
            &[1, 3, 4, 5, 8],
        ]);
        let report = slp_identity_check(&l).unwrap();
        assert!(report.all_hold(), "{report:?}");

        // head list larger than the interior
        let l = lists(&[&[1, 2, 3, 4, 5], &[1], &[1]]);
        let report = slp_identity_check(&l).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn slp_identities_reject_varying_interior() {
        let l = lists(&[&[1, 2], &[1, 2, 3], &[1, 2], &[1, 2, 3], &[1]]);
        assert!(matches!(
            slp_identity_check(&l),
            Err(PathError::Hypothesis(_))
        ));
    }

    #[test]
    fn colorable_criterion() {
        assert!(path_colorable(&lists(&[&[1, 2], &[1, 2], &[1, 2]]), 1).unwrap());
        assert!(!path_colorable(&lists(&[&[1], &[1, 2], &[2]]), 1).unwrap());
        assert!(path_colorable(&lists(&[&[1, 2, 3]]), 2).unwrap());
        assert!(matches!(
            path_colorable(&lists(&[&[1, 2], &[1], &[1, 2]]), 1),
            Err(PathError::Hypothesis(_))
        ));
    }

    #[test]
    fn color_path_examples() {
        let phi = color_path(&lists(&[&[1, 2], &[1, 2], &[1, 2]]), 1)
            .unwrap()
            .unwrap();
        assert_eq!(phi, lists(&[&[1], &[2], &[1]]));

        assert!(color_path(&lists(&[&[1], &[1, 2], &[2]]), 1)
            .unwrap()
            .is_none());

        let phi = color_path(&lists(&[&[1, 2, 3]]), 2).unwrap().unwrap();
        assert_eq!(phi, lists(&[&[1, 2]]));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn odd_lists() -> impl Strategy<Value = Vec<ColorSet>> {
            proptest::sample::select(vec![1usize, 3, 5, 7]).prop_flat_map(|n| {
                proptest::collection::vec(proptest::collection::btree_set(0u32..6, 1..5), n..=n)
            })
        }

        fn color_subset() -> impl Strategy<Value = ColorSet> {
            proptest::collection::btree_set(0u32..6, 0..4)
        }

        proptest! {
            /// Definitional and closed-form damage agree exactly; the
            /// damage() entry point errors out if they ever diverged.
            #[test]
            fn damage_routes_agree(lists in odd_lists(), s in color_subset(), t in color_subset()) {
                prop_assert!(damage(&lists, &s, &t).is_ok());
            }

            /// The reduced potential obeys the inclusion-exclusion form
            /// over the lambda and hat sets.
            #[test]
            fn reduced_slp_identity(lists in odd_lists(), s in color_subset(), t in color_subset()) {
                let hats = hat_sets(&lists).unwrap();
                let base = slp(&lists).unwrap() as i64;
                let reduced = slp(&reduce_lists(&lists, &s, &t)).unwrap() as i64;
                let head = hats.lambda.union(&hats.hat_head).filter(|c| s.contains(c)).count() as i64;
                let tail = hats.lambda.union(&hats.hat_tail).filter(|c| t.contains(c)).count() as i64;
                let both = hats.lambda.iter().filter(|c| s.contains(c) && t.contains(c)).count() as i64;
                prop_assert_eq!(reduced, base - (head + tail - both));
            }

            /// Reducing by nothing changes nothing.
            #[test]
            fn empty_reduction_is_identity(lists in odd_lists()) {
                let e = ColorSet::new();
                prop_assert_eq!(reduce_lists(&lists, &e, &e), lists);
            }
        }
    }

    #[test]
    fn color_path_output_is_proper() {
        // adjacent chosen sets must be disjoint and drawn from the lists
        let l = lists(&[
            &[1, 2, 3, 4],
            &[1, 2, 3, 4],
            &[2, 3, 4, 5],
            &[1, 2, 4, 5],
            &[1, 2, 3, 4],
        ]);
        let phi = color_path(&l, 2).unwrap().unwrap();
        for (i, set) in phi.iter().enumerate() {
            assert_eq!(set.len(), 2);
            assert!(set.is_subset(&l[i]));
            if i > 0 {
                assert!(set.intersection(&phi[i - 1]).next().is_none());
            }
        }
    }
}
