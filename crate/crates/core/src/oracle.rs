//! Ground-truth brute force.
//!
//! `find_lb_coloring` searches for an (L,b)-colouring by backtracking with
//! forward checking; a None answer means the exhaustive recursion proved
//! there is none. `check_choosable` tests (a,b)-choosability either by
//! enumerating canonical a-list assignments over a bounded palette or by
//! sampling random assignments. A witness is always a real refutation;
//! the verdict "choosable over palette" is certified only relative to the
//! configured palette size, which the report states explicitly.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::lists::{Color, ColorSet, FoldColoring, ListAssignment};
use crate::subsets::for_each_combination;

pub const DEFAULT_PALETTE_CAP: usize = 12;
pub const DEFAULT_PRODUCT_CAP: usize = 30;
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("node budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("exhaustive mode cap exceeded: {0}")]
    CapExceeded(String),
    #[error("instance uses {0} distinct colours; at most 128 are supported")]
    TooManyColors(usize),
    #[error("invalid sampler config: {0}")]
    BadConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone)]
pub struct SamplerConfig {
    pub mode: SampleMode,
    pub palette_size: usize,
    pub sample_count: usize,
    pub seed: u64,
    pub palette_cap: usize,
    pub product_cap: usize,
}

impl SamplerConfig {
    pub fn exhaustive(palette_size: usize) -> Self {
        SamplerConfig {
            mode: SampleMode::Exhaustive,
            palette_size,
            sample_count: 0,
            seed: 42,
            palette_cap: DEFAULT_PALETTE_CAP,
            product_cap: DEFAULT_PRODUCT_CAP,
        }
    }

    pub fn random(palette_size: usize, sample_count: usize, seed: u64) -> Self {
        SamplerConfig {
            mode: SampleMode::Random,
            palette_size,
            sample_count,
            seed,
            palette_cap: DEFAULT_PALETTE_CAP,
            product_cap: DEFAULT_PRODUCT_CAP,
        }
    }
}

/// Outcome of a choosability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChoosableVerdict {
    /// No bad assignment exists over the stated palette. Full
    /// choosability would need a palette of |V|·a colours, so this is a
    /// palette-relative certificate.
    ChoosableOverPalette { palette: usize },
    /// An a-list assignment with no (L,b)-colouring; valid unconditionally.
    Witness(ListAssignment),
    /// Random mode only: no counterexample among the sampled assignments.
    NoCounterexampleFound { samples: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosableReport {
    pub verdict: ChoosableVerdict,
    pub assignments_checked: u64,
    pub seed: Option<u64>,
}

/// Internal bitmask view of an instance: colours become indices into a
/// sorted colour table, lists become u128 masks.
struct MaskInstance {
    colors: Vec<Color>,
    lists: Vec<u128>,
    order: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

fn build_mask_instance(graph: &Graph, lists: &ListAssignment) -> Result<MaskInstance, OracleError> {
    let mut colors = ColorSet::new();
    for v in graph.vertices() {
        if let Some(l) = lists.get(v) {
            colors.extend(l.iter().copied());
        }
    }
    let colors: Vec<Color> = colors.into_iter().collect();
    if colors.len() > 128 {
        return Err(OracleError::TooManyColors(colors.len()));
    }
    let index: BTreeMap<Color, usize> = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let n = graph.vertex_count();
    let mut masks = vec![0u128; n];
    for (i, v) in graph.vertices().enumerate() {
        if let Some(l) = lists.get(v) {
            for c in l {
                masks[i] |= 1u128 << index[c];
            }
        }
    }
    // decreasing degree, ties by declaration order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(graph.degree(i)), i));
    let adj: Vec<Vec<usize>> = (0..n).map(|i| graph.neighbors(i).to_vec()).collect();
    Ok(MaskInstance {
        colors,
        lists: masks,
        order,
        adj,
    })
}

struct MaskSearch<'a> {
    inst: &'a MaskInstance,
    fold: usize,
    nodes: u64,
    budget: u64,
    chosen: Vec<u128>,
    done: Vec<bool>,
    exceeded: bool,
}

impl<'a> MaskSearch<'a> {
    fn run(mut self) -> Result<Option<Vec<u128>>, OracleError> {
        let found = self.recurse(0);
        if self.exceeded {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        Ok(if found { Some(self.chosen) } else { None })
    }

    fn recurse(&mut self, depth: usize) -> bool {
        if depth == self.inst.order.len() {
            return true;
        }
        let v = self.inst.order[depth];
        let mut avail = self.inst.lists[v];
        for &w in &self.inst.adj[v] {
            if self.done[w] {
                avail &= !self.chosen[w];
            }
        }
        let bits: Vec<u32> = (0..128).filter(|&b| avail & (1u128 << b) != 0).collect();
        if bits.len() < self.fold {
            return false;
        }
        let mut found = false;
        let fold = self.fold;
        let mut picks: Vec<u128> = Vec::new();
        for_each_combination(bits.len(), fold, |idx| {
            picks.push(idx.iter().fold(0u128, |m, &i| m | (1u128 << bits[i])));
            true
        });
        for pick in picks {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exceeded = true;
                return false;
            }
            // forward check: every uncoloured neighbour must keep >= fold colours
            let mut viable = true;
            for &w in &self.inst.adj[v] {
                if self.done[w] {
                    continue;
                }
                let mut rem = self.inst.lists[w] & !pick;
                for &x in &self.inst.adj[w] {
                    if self.done[x] {
                        rem &= !self.chosen[x];
                    }
                }
                if (rem.count_ones() as usize) < self.fold {
                    viable = false;
                    break;
                }
            }
            if !viable {
                continue;
            }
            self.chosen[v] = pick;
            self.done[v] = true;
            if self.recurse(depth + 1) {
                found = true;
                break;
            }
            if self.exceeded {
                return false;
            }
            self.done[v] = false;
            self.chosen[v] = 0;
        }
        found
    }
}

/// Find an (L,b)-colouring of the graph, or prove there is none.
///
/// Backtracks over vertices in decreasing-degree order, trying colour
/// subsets in lexicographic order, with forward checking. Distinct from a
/// "no colouring" answer, exceeding the node budget is an error.
pub fn find_lb_coloring(
    graph: &Graph,
    lists: &ListAssignment,
    fold: usize,
    budget: u64,
) -> Result<Option<FoldColoring>, OracleError> {
    for v in graph.vertices() {
        match lists.get(v) {
            Some(l) if l.len() >= fold => {}
            _ => return Ok(None),
        }
    }
    let inst = build_mask_instance(graph, lists)?;
    let n = graph.vertex_count();
    let search = MaskSearch {
        inst: &inst,
        fold,
        nodes: 0,
        budget,
        chosen: vec![0u128; n],
        done: vec![false; n],
        exceeded: false,
    };
    let Some(chosen) = search.run()? else {
        return Ok(None);
    };
    let mut coloring = FoldColoring::new(fold);
    for (i, v) in graph.vertices().enumerate() {
        let set: ColorSet = (0..128)
            .filter(|&b| chosen[i] & (1u128 << b) != 0)
            .map(|b| inst.colors[b as usize])
            .collect();
        coloring.set(v, set);
    }
    Ok(Some(coloring))
}

/// Fast path used by the exhaustive enumerator: lists are palette masks.
fn mask_colorable(adj: &[Vec<usize>], order: &[usize], lists: &[u16], fold: usize) -> bool {
    fn recurse(
        adj: &[Vec<usize>],
        order: &[usize],
        lists: &[u16],
        fold: usize,
        depth: usize,
        chosen: &mut [u16],
        done: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let mut avail = lists[v];
        for &w in &adj[v] {
            if done[w] {
                avail &= !chosen[w];
            }
        }
        if (avail.count_ones() as usize) < fold {
            return false;
        }
        if fold == 1 {
            // hot path: iterate single colours straight off the mask
            let mut rest = avail;
            while rest != 0 {
                let pick = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let mut viable = true;
                for &w in &adj[v] {
                    if done[w] {
                        continue;
                    }
                    let mut rem = lists[w] & !pick;
                    for &x in &adj[w] {
                        if done[x] {
                            rem &= !chosen[x];
                        }
                    }
                    if rem == 0 {
                        viable = false;
                        break;
                    }
                }
                if viable {
                    chosen[v] = pick;
                    done[v] = true;
                    if recurse(adj, order, lists, fold, depth + 1, chosen, done) {
                        return true;
                    }
                    done[v] = false;
                    chosen[v] = 0;
                }
            }
            return false;
        }
        let bits: Vec<u16> = (0..16).filter(|&b| avail & (1 << b) != 0).collect();
        let mut ok = false;
        for_each_combination(bits.len(), fold, |idx| {
            let pick = idx.iter().fold(0u16, |m, &i| m | (1 << bits[i]));
            let mut viable = true;
            for &w in &adj[v] {
                if done[w] {
                    continue;
                }
                let mut rem = lists[w] & !pick;
                for &x in &adj[w] {
                    if done[x] {
                        rem &= !chosen[x];
                    }
                }
                if (rem.count_ones() as usize) < fold {
                    viable = false;
                    break;
                }
            }
            if viable {
                chosen[v] = pick;
                done[v] = true;
                if recurse(adj, order, lists, fold, depth + 1, chosen, done) {
                    ok = true;
                    return false;
                }
                done[v] = false;
                chosen[v] = 0;
            }
            true
        });
        ok
    }
    let mut chosen = vec![0u16; lists.len()];
    let mut done = vec![false; lists.len()];
    recurse(adj, order, lists, fold, 0, &mut chosen, &mut done)
}

/// All canonical lists a vertex can take: `size` colours from the `used`
/// already-seen ones plus a consecutive block of fresh ones, at most
/// `max_fresh` of them. Sorted ascending by colour vector.
fn canonical_vertex_options(used: usize, size: usize, max_fresh: usize) -> Vec<Vec<u32>> {
    let mut opts: Vec<Vec<u32>> = Vec::new();
    for fresh in 0..=size.min(max_fresh) {
        let old = size - fresh;
        if old > used {
            continue;
        }
        for_each_combination(used, old, |idx| {
            let mut list: Vec<u32> = idx.iter().map(|&i| i as u32).collect();
            list.extend((used..used + fresh).map(|c| c as u32));
            opts.push(list);
            true
        });
    }
    opts.sort();
    opts
}

/// Enumerate canonical a-list assignments over `palette` colours whose
/// total number of distinct colours is exactly `total`. Canonical means:
/// colours are named by first occurrence in vertex order, so within each
/// vertex the fresh colours are a consecutive block starting at the
/// current colour count. Visits assignments in lexicographic order of the
/// per-vertex sorted colour vectors; the callback returns false to stop.
fn for_each_canonical_assignment<F>(n: usize, a: usize, total: usize, f: &mut F) -> bool
where
    F: FnMut(&[Vec<u32>]) -> bool,
{
    // options depend only on how many colours are used so far
    let options: Vec<Vec<Vec<u32>>> = (0..=total)
        .map(|used| canonical_vertex_options(used, a, total - used))
        .collect();

    fn recurse<F>(
        n: usize,
        a: usize,
        total: usize,
        used: usize,
        options: &[Vec<Vec<u32>>],
        acc: &mut Vec<Vec<u32>>,
        f: &mut F,
    ) -> bool
    where
        F: FnMut(&[Vec<u32>]) -> bool,
    {
        if acc.len() == n {
            return used != total || f(acc);
        }
        // prune: remaining vertices cannot introduce enough fresh colours
        let remaining = n - acc.len();
        if used + remaining * a < total {
            return true;
        }
        for list in &options[used] {
            let fresh = list.iter().filter(|&&c| (c as usize) >= used).count();
            acc.push(list.clone());
            let more = recurse(n, a, total, used + fresh, options, acc, f);
            acc.pop();
            if !more {
                return false;
            }
        }
        true
    }

    let mut acc = Vec::with_capacity(n);
    recurse(n, a, total, 0, &options, &mut acc, f)
}

/// Enumerate every canonical assignment with the given per-vertex list
/// sizes over at most `palette` colours (no staging by total).
pub fn for_each_canonical_sized<F>(sizes: &[usize], palette: usize, f: &mut F) -> bool
where
    F: FnMut(&[Vec<u32>]) -> bool,
{
    fn recurse<F>(
        sizes: &[usize],
        palette: usize,
        used: usize,
        acc: &mut Vec<Vec<u32>>,
        f: &mut F,
    ) -> bool
    where
        F: FnMut(&[Vec<u32>]) -> bool,
    {
        if acc.len() == sizes.len() {
            return f(acc);
        }
        let size = sizes[acc.len()];
        for list in canonical_vertex_options(used, size, palette - used) {
            let fresh = list.iter().filter(|&&c| (c as usize) >= used).count();
            acc.push(list);
            let more = recurse(sizes, palette, used + fresh, acc, f);
            acc.pop();
            if !more {
                return false;
            }
        }
        true
    }
    let mut acc = Vec::with_capacity(sizes.len());
    recurse(sizes, palette, 0, &mut acc, f)
}

/// Test (a,b)-choosability.
///
/// Exhaustive mode iterates canonical assignments staged by the number of
/// distinct colours (2-colour assignments first), which finds small
/// witnesses quickly and deduplicates colour renamings by construction.
pub fn check_choosable(
    graph: &Graph,
    a: usize,
    fold: usize,
    cfg: &SamplerConfig,
) -> Result<ChoosableReport, OracleError> {
    if a < fold {
        return Err(OracleError::BadConfig(format!(
            "list size a = {a} smaller than fold b = {fold}"
        )));
    }
    let n = graph.vertex_count();
    match cfg.mode {
        SampleMode::Exhaustive => {
            if cfg.palette_size > cfg.palette_cap {
                return Err(OracleError::CapExceeded(format!(
                    "palette {} > cap {}",
                    cfg.palette_size, cfg.palette_cap
                )));
            }
            if n * a > cfg.product_cap {
                return Err(OracleError::CapExceeded(format!(
                    "|V|*a = {} > cap {}",
                    n * a,
                    cfg.product_cap
                )));
            }
            if cfg.palette_size < a {
                return Err(OracleError::BadConfig(format!(
                    "palette {} smaller than list size {a}",
                    cfg.palette_size
                )));
            }
            let order: Vec<usize> = {
                let mut o: Vec<usize> = (0..n).collect();
                o.sort_by_key(|&i| (std::cmp::Reverse(graph.degree(i)), i));
                o
            };
            let adj: Vec<Vec<usize>> = (0..n).map(|i| graph.neighbors(i).to_vec()).collect();
            let mut checked: u64 = 0;
            let mut witness: Option<ListAssignment> = None;
            for total in a..=cfg.palette_size {
                let mut masks = vec![0u16; n];
                let complete = for_each_canonical_assignment(n, a, total, &mut |assign| {
                    checked += 1;
                    for (i, list) in assign.iter().enumerate() {
                        masks[i] = list.iter().fold(0u16, |m, &c| m | (1 << c));
                    }
                    if mask_colorable(&adj, &order, &masks, fold) {
                        true
                    } else {
                        let mut la = ListAssignment::default();
                        for (i, list) in assign.iter().enumerate() {
                            la.set(graph.vertex_name(i), list.iter().copied().collect());
                        }
                        witness = Some(la);
                        false
                    }
                });
                if !complete {
                    break;
                }
            }
            let verdict = match witness {
                Some(w) => ChoosableVerdict::Witness(w),
                None => ChoosableVerdict::ChoosableOverPalette {
                    palette: cfg.palette_size,
                },
            };
            Ok(ChoosableReport {
                verdict,
                assignments_checked: checked,
                seed: None,
            })
        }
        SampleMode::Random => {
            if cfg.palette_size < a {
                return Err(OracleError::BadConfig(format!(
                    "palette {} smaller than list size {a}",
                    cfg.palette_size
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let palette: Vec<Color> = (0..cfg.palette_size as Color).collect();
            for s in 0..cfg.sample_count {
                let mut la = ListAssignment::default();
                for v in graph.vertices() {
                    la.set(v, random_subset(&mut rng, &palette, a));
                }
                if find_lb_coloring(graph, &la, fold, DEFAULT_NODE_BUDGET)?.is_none() {
                    return Ok(ChoosableReport {
                        verdict: ChoosableVerdict::Witness(la),
                        assignments_checked: (s + 1) as u64,
                        seed: Some(cfg.seed),
                    });
                }
            }
            Ok(ChoosableReport {
                verdict: ChoosableVerdict::NoCounterexampleFound {
                    samples: cfg.sample_count,
                },
                assignments_checked: cfg.sample_count as u64,
                seed: Some(cfg.seed),
            })
        }
    }
}

pub fn random_subset<R: Rng>(rng: &mut R, pool: &[Color], k: usize) -> ColorSet {
    assert!(k <= pool.len(), "subset size exceeds pool");
    // Floyd's algorithm
    let mut chosen = ColorSet::new();
    let n = pool.len();
    for j in n - k..n {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(pool[t]) {
            chosen.insert(pool[j]);
        }
    }
    chosen
}
