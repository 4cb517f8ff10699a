//! Constructive b-fold colouring of odd cycles.
//!
//! For C_{2k+1} with an a-list assignment and a/b ≥ 2 + 1/k, colours are
//! processed one at a time: colours common to every list are placed on a
//! shifted independent set {v_i, v_{i+2}, …, v_{i+2k−2}}, and every other
//! colour sweeps the cycle starting just after a vertex whose list misses
//! it, landing wherever it is listed, not on the previous vertex, and the
//! vertex still wants colours. A vertex that already holds b colours is
//! never assigned more, in either phase.

use thiserror::Error;

use crate::graph::Graph;
use crate::lists::{Color, ColorSet, FoldColoring, ListAssignment};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("ratio violation: a/b = {a}/{b} < 2 + 1/{k}")]
    RatioTooSmall { a: usize, b: usize, k: usize },
    #[error("expected {expected} lists of exactly {size} colours")]
    BadLists { expected: usize, size: usize },
    #[error("procedure left vertex v{0} with {1} of {2} colours")]
    Incomplete(usize, usize, usize),
}

/// C_{2k+1} with an a-list assignment and fold target b.
#[derive(Debug, Clone)]
pub struct CycleInstance {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    /// Lists for v_0, …, v_{2k} in cyclic order.
    pub lists: Vec<ColorSet>,
}

impl CycleInstance {
    pub fn new(k: usize, a: usize, b: usize, lists: Vec<ColorSet>) -> Result<Self, CycleError> {
        if k * a < (2 * k + 1) * b {
            return Err(CycleError::RatioTooSmall { a, b, k });
        }
        if lists.len() != 2 * k + 1 || lists.iter().any(|l| l.len() != a) {
            return Err(CycleError::BadLists {
                expected: 2 * k + 1,
                size: a,
            });
        }
        Ok(CycleInstance { k, a, b, lists })
    }

    pub fn graph(&self) -> Graph {
        let n = 2 * self.k + 1;
        let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n)))
            .collect();
        Graph::new(verts, edges).expect("cycle is a valid graph")
    }

    pub fn list_assignment(&self) -> ListAssignment {
        let mut la = ListAssignment::default();
        for (i, l) in self.lists.iter().enumerate() {
            la.set(&format!("v{i}"), l.clone());
        }
        la
    }
}

/// Run the colouring procedure. The output always passes verification
/// against the instance when the ratio precondition holds.
pub fn color_odd_cycle(inst: &CycleInstance) -> Result<FoldColoring, CycleError> {
    let n = 2 * inst.k + 1;
    let b = inst.b;

    // Common colours first (ascending), then the rest ascending.
    let union: Vec<Color> = {
        let mut u = ColorSet::new();
        for l in &inst.lists {
            u.extend(l.iter().copied());
        }
        u.into_iter().collect()
    };
    let common: ColorSet = inst.lists[1..]
        .iter()
        .fold(inst.lists[0].clone(), |acc, l| {
            acc.intersection(l).copied().collect()
        });
    let mut ordered: Vec<Color> = common.iter().copied().collect();
    ordered.extend(union.iter().copied().filter(|c| !common.contains(c)));
    let q = common.len();

    let mut chosen: Vec<ColorSet> = vec![ColorSet::new(); n];
    for (rank, &color) in ordered.iter().enumerate() {
        let i = rank + 1; // colours are 1-indexed in the schedule
        if i <= q {
            // independent set {v_i, v_{i+2}, ..., v_{i+2k-2}} mod n
            for step in 0..inst.k {
                let j = (i + 2 * step) % n;
                if chosen[j].len() < b {
                    chosen[j].insert(color);
                }
            }
        } else {
            let start = (0..n)
                .find(|&s| !inst.lists[s].contains(&color))
                .expect("non-common colour misses some list");
            for off in 0..n {
                let j = (start + off) % n;
                let prev = (j + n - 1) % n;
                if inst.lists[j].contains(&color)
                    && !chosen[prev].contains(&color)
                    && chosen[j].len() < b
                {
                    chosen[j].insert(color);
                }
            }
        }
    }

    for (j, set) in chosen.iter().enumerate() {
        if set.len() != b {
            return Err(CycleError::Incomplete(j, set.len(), b));
        }
    }
    let mut phi = FoldColoring::new(b);
    for (j, set) in chosen.into_iter().enumerate() {
        phi.set(&format!("v{j}"), set);
    }
    Ok(phi)
}
