//! List assignments, fold colourings, and the independent verifier.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::graph::Graph;

/// Colours are non-negative integers; names are immaterial.
pub type Color = u32;
/// Colour sets are kept sorted so every iteration order is deterministic.
pub type ColorSet = BTreeSet<Color>;

pub fn color_set<I: IntoIterator<Item = Color>>(colors: I) -> ColorSet {
    colors.into_iter().collect()
}

/// A finite mapping from vertex ids to finite colour lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment {
    pub lists: BTreeMap<String, ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: BTreeMap<String, ColorSet>) -> Self {
        ListAssignment { lists }
    }

    pub fn get(&self, v: &str) -> Option<&ColorSet> {
        self.lists.get(v)
    }

    pub fn set(&mut self, v: &str, colors: ColorSet) {
        self.lists.insert(v.to_owned(), colors);
    }

    /// Ordered lists along a sequence of vertex names. Missing vertices are
    /// an error on the caller's side; this panics to surface it early.
    pub fn along<'a, I: IntoIterator<Item = &'a str>>(&self, order: I) -> Vec<ColorSet> {
        order
            .into_iter()
            .map(|v| {
                self.lists
                    .get(v)
                    .unwrap_or_else(|| panic!("no list for vertex {v:?}"))
                    .clone()
            })
            .collect()
    }
}

/// A b-fold colouring: each vertex holds a set of exactly `fold` colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldColoring {
    pub fold: usize,
    pub assignment: BTreeMap<String, ColorSet>,
}

impl FoldColoring {
    pub fn new(fold: usize) -> Self {
        FoldColoring {
            fold,
            assignment: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, v: &str, colors: ColorSet) {
        self.assignment.insert(v.to_owned(), colors);
    }

    pub fn get(&self, v: &str) -> Option<&ColorSet> {
        self.assignment.get(v)
    }
}

/// One broken constraint found by [`verify_coloring`]. Violations are data,
/// not errors: an invalid colouring yields a non-empty report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingVertex {
        vertex: String,
    },
    WrongSize {
        vertex: String,
        got: usize,
        want: usize,
    },
    NotFromList {
        vertex: String,
        extra: ColorSet,
    },
    EdgeConflict {
        a: String,
        b: String,
        shared: ColorSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingVertex { vertex } => write!(f, "vertex {vertex} is uncoloured"),
            Violation::WrongSize { vertex, got, want } => {
                write!(f, "vertex {vertex} holds {got} colours, expected {want}")
            }
            Violation::NotFromList { vertex, extra } => {
                write!(
                    f,
                    "vertex {vertex} uses colours outside its list: {extra:?}"
                )
            }
            Violation::EdgeConflict { a, b, shared } => {
                write!(f, "edge {a} -- {b} shares colours {shared:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a candidate colouring against every constraint: coverage, set
/// size, list containment, and edge disjointness. Independent of every
/// solver in the crate, so it can vouch for their outputs.
pub fn verify_coloring(
    graph: &Graph,
    lists: &ListAssignment,
    fold: usize,
    coloring: &FoldColoring,
) -> VerificationReport {
    let mut violations = Vec::new();
    for v in graph.vertices() {
        let Some(set) = coloring.assignment.get(v) else {
            violations.push(Violation::MissingVertex {
                vertex: v.to_owned(),
            });
            continue;
        };
        if set.len() != fold {
            violations.push(Violation::WrongSize {
                vertex: v.to_owned(),
                got: set.len(),
                want: fold,
            });
        }
        if let Some(list) = lists.get(v) {
            let extra: ColorSet = set.difference(list).copied().collect();
            if !extra.is_empty() {
                violations.push(Violation::NotFromList {
                    vertex: v.to_owned(),
                    extra,
                });
            }
        }
    }
    for (a, b) in graph.edges() {
        let (Some(sa), Some(sb)) = (coloring.assignment.get(a), coloring.assignment.get(b)) else {
            continue; // already reported as missing
        };
        let shared: ColorSet = sa.intersection(sb).copied().collect();
        if !shared.is_empty() {
            violations.push(Violation::EdgeConflict {
                a: a.to_owned(),
                b: b.to_owned(),
                shared,
            });
        }
    }
    VerificationReport { violations }
}

/// Rename colours by first occurrence along the graph's vertex order.
///
/// Two assignments that differ only by a colour bijection canonicalize to
/// the same assignment, which is the only symmetry the setting admits.
pub fn canonicalize_assignment(graph: &Graph, lists: &ListAssignment) -> ListAssignment {
    let mut rename: HashMap<Color, Color> = HashMap::new();
    let mut next: Color = 0;
    let mut out = BTreeMap::new();
    for v in graph.vertices() {
        if let Some(list) = lists.get(v) {
            let mapped: ColorSet = list
                .iter()
                .map(|&c| {
                    *rename.entry(c).or_insert_with(|| {
                        let id = next;
                        next += 1;
                        id
                    })
                })
                .collect();
            out.insert(v.to_owned(), mapped);
        }
    }
    ListAssignment::new(out)
}
