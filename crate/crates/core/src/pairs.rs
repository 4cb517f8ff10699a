//! Couples, damage classification, condition validators, and the search
//! for a pair (S,T) whose damage stays within every path's budget.
//!
//! The hub lists are indexed consistently: shared colours pair with
//! themselves, the rest pair off in ascending order. A couple's damage on
//! an odd internal path is 0, 1 or 2 (safe, light, heavy), and the damage
//! of a coupled pair is the sum over its couples. The search tries
//! coupled pairs first, then cross-coupled simple pairs, then all pairs;
//! exhausting the space while the C/T conditions hold would falsify the
//! existence theorems, so that outcome is a distinct loud error.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::lists::{Color, ColorSet, ListAssignment};
use crate::path::{self, HatSets};
use crate::subsets::{combinations, for_each_combination};
use crate::theta::ThetaGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("hub lists must have equal size, got {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("internal path {index} has even vertex count {n}")]
    EvenInternalPath { index: usize, n: usize },
    #[error("wrong theta shape: {0}")]
    Shape(String),
    #[error("missing list for vertex {0}")]
    MissingList(String),
    #[error(transparent)]
    Path(#[from] path::PathError),
    #[error(
        "search space exhausted although the conditions validated true; \
         this falsifies the existence theorem on this instance"
    )]
    TheoremFalsified,
}

/// A consistent indexing of L(u) and L(v) into couples (c_j, c'_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupleIndex {
    pub couples: Vec<(Color, Color)>,
}

impl CoupleIndex {
    pub fn len(&self) -> usize {
        self.couples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.couples.is_empty()
    }
}

/// Pair L(u) and L(v): shared colours with themselves first (ascending),
/// then the leftovers ascending-to-ascending.
pub fn consistent_indexing(lu: &ColorSet, lv: &ColorSet) -> Result<CoupleIndex, PairError> {
    if lu.len() != lv.len() {
        return Err(PairError::SizeMismatch(lu.len(), lv.len()));
    }
    let shared: Vec<Color> = lu.intersection(lv).copied().collect();
    let only_u: Vec<Color> = lu.difference(lv).copied().collect();
    let only_v: Vec<Color> = lv.difference(lu).copied().collect();
    let mut couples: Vec<(Color, Color)> = shared.iter().map(|&c| (c, c)).collect();
    couples.extend(only_u.into_iter().zip(only_v));
    Ok(CoupleIndex { couples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoupleLabel {
    Heavy,
    Light,
    Safe,
}

/// Per-path couple labels plus the heavy/light/safe counts x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathClassification {
    pub labels: Vec<CoupleLabel>,
    pub heavy: usize,
    pub light: usize,
    pub safe: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupleClassification {
    pub per_path: Vec<PathClassification>,
}

/// Damage of a single couple on one path, from the closed form.
pub fn couple_damage(hats: &HatSets, c: Color, cp: Color) -> usize {
    let s: ColorSet = [c].into_iter().collect();
    let t: ColorSet = [cp].into_iter().collect();
    path::damage_closed_form(hats, &s, &t)
}

/// Ordered per-path lists of a theta graph's internal paths.
pub fn internal_path_lists(
    theta: &ThetaGraph,
    lists: &ListAssignment,
) -> Result<Vec<Vec<ColorSet>>, PairError> {
    let mut out = Vec::with_capacity(theta.path_count());
    for i in 0..theta.path_count() {
        let mut path_lists = Vec::new();
        for v in theta.internal_path(i) {
            let l = lists
                .get(&v)
                .ok_or_else(|| PairError::MissingList(v.clone()))?;
            path_lists.push(l.clone());
        }
        out.push(path_lists);
    }
    Ok(out)
}

fn hub_list<'a>(lists: &'a ListAssignment, hub: &str) -> Result<&'a ColorSet, PairError> {
    lists
        .get(hub)
        .ok_or_else(|| PairError::MissingList(hub.to_owned()))
}

/// Hat profiles of every internal path; errors on even paths.
pub fn path_hats(paths: &[Vec<ColorSet>]) -> Result<Vec<HatSets>, PairError> {
    paths
        .iter()
        .enumerate()
        .map(|(index, lists)| {
            if lists.len() % 2 == 0 {
                return Err(PairError::EvenInternalPath {
                    index,
                    n: lists.len(),
                });
            }
            Ok(path::hat_sets(lists)?)
        })
        .collect()
}

/// Label every couple on every internal path.
pub fn classify_couples(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    index: &CoupleIndex,
) -> Result<CoupleClassification, PairError> {
    let paths = internal_path_lists(theta, lists)?;
    let hats = path_hats(&paths)?;
    let mut per_path = Vec::with_capacity(hats.len());
    for h in &hats {
        let mut labels = Vec::with_capacity(index.len());
        let (mut heavy, mut light, mut safe) = (0, 0, 0);
        for &(c, cp) in &index.couples {
            let label = match couple_damage(h, c, cp) {
                2 => {
                    heavy += 1;
                    CoupleLabel::Heavy
                }
                1 => {
                    light += 1;
                    CoupleLabel::Light
                }
                0 => {
                    safe += 1;
                    CoupleLabel::Safe
                }
                d => unreachable!("couple damage {d} outside 0..=2"),
            };
            labels.push(label);
        }
        per_path.push(PathClassification {
            labels,
            heavy,
            light,
            safe,
        });
    }
    Ok(CoupleClassification { per_path })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConditionItem {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConditionReport {
    pub items: Vec<ConditionItem>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    fn push(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.items.push(ConditionItem {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
    }
}

/// Data shared by the condition validators and the pair search.
pub struct ThetaContext {
    pub paths: Vec<Vec<ColorSet>>,
    pub hats: Vec<HatSets>,
    pub slp: Vec<usize>,
    pub hub_damage: Vec<usize>,
    pub lu: ColorSet,
    pub lv: ColorSet,
}

impl ThetaContext {
    pub fn build(theta: &ThetaGraph, lists: &ListAssignment) -> Result<Self, PairError> {
        let paths = internal_path_lists(theta, lists)?;
        let hats = path_hats(&paths)?;
        let slp: Vec<usize> = paths
            .iter()
            .map(|p| path::slp(p))
            .collect::<Result<_, _>>()?;
        let lu = hub_list(lists, "u")?.clone();
        let lv = hub_list(lists, "v")?.clone();
        let hub_damage = hats
            .iter()
            .map(|h| path::damage_closed_form(h, &lu, &lv))
            .collect();
        Ok(ThetaContext {
            paths,
            hats,
            slp,
            hub_damage,
            lu,
            lv,
        })
    }

    /// S_L(P^i) − n_i·m for every path.
    pub fn budgets(&self, m: usize) -> Vec<i64> {
        self.paths
            .iter()
            .zip(&self.slp)
            .map(|(p, &s)| s as i64 - (p.len() * m) as i64)
            .collect()
    }
}

/// Validate the five conditions for the three-path theorem. All failures
/// are report content, never errors.
pub fn check_conditions_c(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    ell: usize,
    tau: usize,
    m: usize,
) -> Result<ConditionReport, PairError> {
    if theta.path_count() != 3 {
        return Err(PairError::Shape(format!(
            "need exactly 3 paths, got {}",
            theta.path_count()
        )));
    }
    for i in 0..3 {
        let n = theta.internal_len(i);
        if n < 3 || n % 2 == 0 {
            return Err(PairError::Shape(format!(
                "internal path {i} must have odd length >= 3, got {n}"
            )));
        }
    }
    let ctx = ThetaContext::build(theta, lists)?;
    let mut report = ConditionReport { items: Vec::new() };

    let parity = ell % 2 == 0 && tau % 2 == 0;
    let c1 = parity && tau <= 2 * (m / 2) && ell + tau >= 2 * m.div_ceil(2);
    report.push(
        "C1",
        c1,
        format!(
            "ell = {ell}, tau = {tau} (both even: {parity}); tau <= 2*floor(m/2) and \
             ell + tau >= 2*ceil(m/2) with m = {m}"
        ),
    );

    let c2 = ctx.lu.len() == ell && ctx.lv.len() == ell;
    report.push(
        "C2",
        c2,
        format!("|L(u)| = {}, |L(v)| = {}", ctx.lu.len(), ctx.lv.len()),
    );

    let mut c3 = true;
    let mut c3_detail = String::new();
    for (i, p) in ctx.paths.iter().enumerate() {
        let head = p.first().map_or(0, |l| l.len());
        let tail = p.last().map_or(0, |l| l.len());
        // head >= 2m - tau and tail >= 2m + 1 - tau, in overflow-safe form
        if head + tau < 2 * m || tail + tau < 2 * m + 1 {
            c3 = false;
        }
        c3_detail.push_str(&format!("P{i}: head {head}, tail {tail}; "));
    }
    report.push("C3", c3, c3_detail);

    let mut c4 = true;
    let mut c4_detail = String::new();
    for (i, p) in ctx.paths.iter().enumerate() {
        for (j, l) in p.iter().enumerate().skip(1).take(p.len().saturating_sub(2)) {
            if l.len() < 2 * m + 1 {
                c4 = false;
                c4_detail.push_str(&format!(
                    "P{i} vertex {}: {} < {}; ",
                    j + 1,
                    l.len(),
                    2 * m + 1
                ));
            }
        }
    }
    report.push(
        "C4",
        c4,
        if c4_detail.is_empty() {
            "all interior lists large enough".into()
        } else {
            c4_detail
        },
    );

    let mut c5 = true;
    let mut c5_detail = String::new();
    for i in 0..3 {
        let n = ctx.paths[i].len() as i64;
        let lhs = ctx.slp[i] as i64 - n * m as i64;
        let rhs = (m as i64 + (n - 3) / 2 + ctx.hub_damage[i] as i64 - ell as i64 - tau as i64)
            .max(m as i64 + (n - 1) / 2 - tau as i64);
        if lhs < rhs {
            c5 = false;
        }
        c5_detail.push_str(&format!("P{i}: slack {lhs} vs required {rhs}; "));
    }
    report.push("C5", c5, c5_detail);
    Ok(report)
}

/// Validate the five conditions for the four-path theorem (three
/// single-vertex paths and one odd path; ℓ and τ may be odd here).
pub fn check_conditions_t(
    theta: &ThetaGraph,
    lists: &ListAssignment,
    ell: usize,
    tau: usize,
    m: usize,
) -> Result<ConditionReport, PairError> {
    if theta.path_count() != 4 {
        return Err(PairError::Shape(format!(
            "need exactly 4 paths, got {}",
            theta.path_count()
        )));
    }
    for i in 0..3 {
        if theta.internal_len(i) != 1 {
            return Err(PairError::Shape(format!(
                "paths 0..3 must be single-vertex, path {i} has {} vertices",
                theta.internal_len(i)
            )));
        }
    }
    let n3 = theta.internal_len(3);
    if n3 % 2 == 0 {
        return Err(PairError::Shape(format!(
            "long path must have odd vertex count, got {n3}"
        )));
    }
    let ctx = ThetaContext::build(theta, lists)?;
    let mut report = ConditionReport { items: Vec::new() };

    let t1 = tau <= m && ell + tau >= m;
    report.push(
        "T1",
        t1,
        format!("tau = {tau} <= m = {m}; ell + tau = {} >= m", ell + tau),
    );

    let t2 = ctx.lu.len() == ell && ctx.lv.len() == ell;
    report.push(
        "T2",
        t2,
        format!("|L(u)| = {}, |L(v)| = {}", ctx.lu.len(), ctx.lv.len()),
    );

    let mut t3 = true;
    let mut t3_detail = String::new();
    for (i, p) in ctx.paths.iter().enumerate() {
        let head = p.first().map_or(0, |l| l.len());
        let mut ok = head + tau >= 2 * m + 1;
        if i == 3 && p.len() >= 3 {
            let tail = p.last().map_or(0, |l| l.len());
            ok = ok && tail + tau >= 2 * m + 1;
            t3_detail.push_str(&format!("P3 tail {tail}; "));
        }
        if !ok {
            t3 = false;
        }
        t3_detail.push_str(&format!("P{i} head {head}; "));
    }
    report.push("T3", t3, t3_detail);

    let mut t4 = true;
    let mut t4_detail = String::new();
    for (i, p) in ctx.paths.iter().enumerate() {
        for (j, l) in p.iter().enumerate().skip(1).take(p.len().saturating_sub(2)) {
            if l.len() < 2 * m + 1 {
                t4 = false;
                t4_detail.push_str(&format!(
                    "P{i} vertex {}: {} < {}; ",
                    j + 1,
                    l.len(),
                    2 * m + 1
                ));
            }
        }
    }
    report.push(
        "T4",
        t4,
        if t4_detail.is_empty() {
            "all interior lists large enough".into()
        } else {
            t4_detail
        },
    );

    let mut t5 = true;
    let mut t5_detail = String::new();
    for i in 0..4 {
        let n = ctx.paths[i].len() as i64;
        let lhs = ctx.slp[i] as i64 - n * m as i64;
        let rhs = ((n + 1) / 2 + m as i64 - ell as i64 - tau as i64 + ctx.hub_damage[i] as i64)
            .max((n + 1) / 2 + m as i64 - tau as i64);
        if lhs < rhs {
            t5 = false;
        }
        t5_detail.push_str(&format!("P{i}: slack {lhs} vs required {rhs}; "));
    }
    report.push("T5", t5, t5_detail);
    Ok(report)
}

/// How a successful pair was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStage {
    Coupled,
    CrossCoupled,
    AllPairs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCandidate {
    pub s: ColorSet,
    pub t: ColorSet,
    pub damages: Vec<usize>,
    pub simple: bool,
    pub stage: SearchStage,
}

/// Is (S,T) simple with respect to every internal path's Λ?
pub fn is_simple(
    hats: &[HatSets],
    lu: &ColorSet,
    lv: &ColorSet,
    s: &ColorSet,
    t: &ColorSet,
) -> bool {
    hats.iter().all(|h| {
        let head_ok = s
            .iter()
            .all(|c| !(lv.contains(c) && !t.contains(c) && h.lambda.contains(c)));
        let tail_ok = t
            .iter()
            .all(|c| !(lu.contains(c) && !s.contains(c) && h.lambda.contains(c)));
        head_ok && tail_ok
    })
}

/// Every 100th closed-form damage evaluation inside the search is
/// re-derived from the definition; a mismatch would be a calculus bug.
static SPOT_CHECK: AtomicU64 = AtomicU64::new(0);

fn spot_check_damage(
    ctx: &ThetaContext,
    path_idx: usize,
    s: &ColorSet,
    t: &ColorSet,
    closed: usize,
) {
    let lists = &ctx.paths[path_idx];
    let base = path::slp(lists).expect("nonempty path");
    let reduced = path::slp(&path::reduce_lists(lists, s, t)).expect("nonempty path");
    assert_eq!(
        base - reduced,
        closed,
        "closed-form damage diverged from the definition for S={s:?} T={t:?}"
    );
}

fn damages_within(
    ctx: &ThetaContext,
    s: &ColorSet,
    t: &ColorSet,
    budgets: &[i64],
) -> Option<Vec<usize>> {
    let mut damages = Vec::with_capacity(ctx.hats.len());
    for (i, (h, &b)) in ctx.hats.iter().zip(budgets).enumerate() {
        let d = path::damage_closed_form(h, s, t);
        if SPOT_CHECK.fetch_add(1, Ordering::Relaxed) % 100 == 0 {
            spot_check_damage(ctx, i, s, t, d);
        }
        if (d as i64) > b {
            return None;
        }
        damages.push(d);
    }
    Some(damages)
}

/// Search for a pair (S,T) with |S| = |T| = size and per-path damage
/// within the budgets. Coupled pairs are scanned in lexicographic order
/// of their couple-index subsets, then cross-coupled simple pairs, then
/// arbitrary pairs. With `conditions_hold` set, exhaustion is reported as
/// a theorem falsification instead of None.
pub fn find_pair(
    ctx: &ThetaContext,
    index: &CoupleIndex,
    size: usize,
    budgets: &[i64],
    conditions_hold: bool,
) -> Result<Option<PairCandidate>, PairError> {
    let ell = index.len();
    debug_assert_eq!(budgets.len(), ctx.hats.len());

    if size <= ell {
        // Stage 1: coupled pairs. Damage is additive over couples, so
        // precompute each couple's damage vector.
        let per_couple: Vec<Vec<usize>> = index
            .couples
            .iter()
            .map(|&(c, cp)| {
                ctx.hats
                    .iter()
                    .map(|h| couple_damage(h, c, cp))
                    .collect::<Vec<usize>>()
            })
            .collect();
        let mut hit: Option<Vec<usize>> = None;
        for_each_combination(ell, size, |idx| {
            let mut totals = vec![0i64; ctx.hats.len()];
            for &j in idx {
                for (p, &d) in per_couple[j].iter().enumerate() {
                    totals[p] += d as i64;
                }
            }
            if totals.iter().zip(budgets).all(|(d, b)| d <= b) {
                hit = Some(idx.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(idx) = hit {
            let s: ColorSet = idx.iter().map(|&j| index.couples[j].0).collect();
            let t: ColorSet = idx.iter().map(|&j| index.couples[j].1).collect();
            let damages =
                damages_within(ctx, &s, &t, budgets).expect("additivity of couple damage");
            return Ok(Some(PairCandidate {
                s,
                t,
                damages,
                simple: true,
                stage: SearchStage::Coupled,
            }));
        }

        // Stage 2: cross-coupled simple pairs (S from one index subset, T
        // from another).
        let subsets = combinations(&(0..ell).collect::<Vec<usize>>(), size);
        for js in &subsets {
            let s: ColorSet = js.iter().map(|&j| index.couples[j].0).collect();
            for jt in &subsets {
                if js == jt {
                    continue;
                }
                let t: ColorSet = jt.iter().map(|&j| index.couples[j].1).collect();
                if !is_simple(&ctx.hats, &ctx.lu, &ctx.lv, &s, &t) {
                    continue;
                }
                if let Some(damages) = damages_within(ctx, &s, &t, budgets) {
                    return Ok(Some(PairCandidate {
                        s,
                        t,
                        damages,
                        simple: true,
                        stage: SearchStage::CrossCoupled,
                    }));
                }
            }
        }

        // Stage 3: arbitrary pairs.
        let u_colors: Vec<Color> = ctx.lu.iter().copied().collect();
        let v_colors: Vec<Color> = ctx.lv.iter().copied().collect();
        for s_pick in combinations(&u_colors, size) {
            let s: ColorSet = s_pick.iter().copied().collect();
            for t_pick in combinations(&v_colors, size) {
                let t: ColorSet = t_pick.iter().copied().collect();
                if let Some(damages) = damages_within(ctx, &s, &t, budgets) {
                    let simple = is_simple(&ctx.hats, &ctx.lu, &ctx.lv, &s, &t);
                    return Ok(Some(PairCandidate {
                        s,
                        t,
                        damages,
                        simple,
                        stage: SearchStage::AllPairs,
                    }));
                }
            }
        }
    }

    if conditions_hold {
        Err(PairError::TheoremFalsified)
    } else {
        Ok(None)
    }
}

/// β(P^i): how many coupled simple pairs of the given size are bad for
/// path i (damage exceeding the budget). Exact, by enumeration.
pub fn count_bad_pairs(
    ctx: &ThetaContext,
    index: &CoupleIndex,
    size: usize,
    budgets: &[i64],
) -> Vec<u64> {
    let per_couple: Vec<Vec<usize>> = index
        .couples
        .iter()
        .map(|&(c, cp)| {
            ctx.hats
                .iter()
                .map(|h| couple_damage(h, c, cp))
                .collect::<Vec<usize>>()
        })
        .collect();
    let mut counts = vec![0u64; ctx.hats.len()];
    for_each_combination(index.len(), size, |idx| {
        for p in 0..ctx.hats.len() {
            let dam: i64 = idx.iter().map(|&j| per_couple[j][p] as i64).sum();
            if dam > budgets[p] {
                counts[p] += 1;
            }
        }
        true
    });
    counts
}

/// Count size-k coupled subsets of an abstract classification (x heavy,
/// y light, the rest safe) whose weight 2a+b clears the constraint floor.
/// This is the combinatorial quantity the F(x,y) sum closes over, counted
/// here by direct enumeration.
pub fn count_constrained_subsets(ell: usize, k: usize, x: usize, y: usize, floor: i64) -> u64 {
    assert!(x + y <= ell);
    let lo = (2 * x as i64 + y as i64 + k as i64 + 1 - ell as i64).max(floor);
    let mut count = 0u64;
    for_each_combination(ell, k, |idx| {
        let a = idx.iter().filter(|&&j| j < x).count() as i64;
        let b = idx.iter().filter(|&&j| j >= x && j < x + y).count() as i64;
        if 2 * a + b >= lo {
            count += 1;
        }
        true
    });
    count
}
