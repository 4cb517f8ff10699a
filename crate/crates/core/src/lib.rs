//! Exact machinery for list colouring and (a,b)-choosability.
//!
//! The crate is organised around a small immutable data model (graphs,
//! theta graphs, list assignments, fold colourings) plus several engines:
//!
//! * [`oracle`] — ground-truth brute force: find an (L,b)-colouring by
//!   backtracking, or test (a,b)-choosability by enumerating canonical
//!   list assignments over a bounded palette.
//! * [`path`] — the residual-sequence calculus on paths: `S_L(P)`, the
//!   common/end sets of odd paths, list reduction and damage, the exact
//!   colourability criterion and a constructive path colourer.
//! * [`cycle`] — a constructive b-fold colourer for odd cycles.
//! * [`pairs`] — couples, heavy/light/safe classification, the C/T
//!   condition validators and the search for a damage-bounded pair (S,T).
//! * [`solver`] — end-to-end (2m+1,m)-list-colouring of the supported
//!   theta families, including the vertex-splitting reduction.
//! * [`lemma`] — exact-integer sweeps of the constrained binomial sums
//!   F(x,y) and C(t,x) and the identities relating them.
//! * [`classify`] — graph core computation and recognition of the
//!   2-choosable and 3-choice-critical families.
//!
//! All arithmetic is exact; all operations are pure functions of their
//! inputs and safe to call concurrently.
//!
//! ```
//! use thetacolor::lists::{verify_coloring, ListAssignment};
//! use thetacolor::solver;
//! use thetacolor::theta::build_theta;
//!
//! // colour a theta graph with three length-4 paths from identical
//! // 3-colour lists, one colour per vertex
//! let theta = build_theta(vec![4, 4, 4]).unwrap();
//! let graph = theta.to_graph();
//! let mut lists = ListAssignment::default();
//! for v in graph.vertices() {
//!     lists.set(v, [0, 1, 2].into_iter().collect());
//! }
//! let out = solver::solve(&theta, &lists, 1).unwrap();
//! assert!(verify_coloring(&graph, &lists, 1, &out.coloring).is_valid());
//! ```

pub mod classify;
pub mod cycle;
pub mod graph;
pub mod io;
pub mod lemma;
pub mod lists;
pub mod oracle;
pub mod pairs;
pub mod path;
pub mod sample;
pub mod solver;
pub mod subsets;
pub mod suite;
pub mod theta;

pub use graph::Graph;
pub use lists::{Color, ColorSet, FoldColoring, ListAssignment};
pub use theta::ThetaGraph;
