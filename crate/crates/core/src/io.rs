//! JSON schemas for the on-disk formats.
//!
//! * graph:    `{"vertices": ["u", ...], "edges": [["u","v"], ...]}`
//! * theta:    `{"theta": {"lengths": [4,4,6]}}`
//! * lists:    `{"lists": {"u": [0,1,2], ...}}` or, for ordered contexts
//!   such as standalone paths and cycles, `{"lists": [[0,1,2], ...]}`
//! * coloring: `{"fold": 2, "assignment": {"u": [0,3], ...}}`

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::lists::{Color, ColorSet, FoldColoring, ListAssignment};
use crate::theta::{ThetaError, ThetaGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
    #[error("{0}")]
    Schema(String),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ThetaJson {
    pub theta: ThetaShapeJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ThetaShapeJson {
    pub lengths: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ListsJson {
    Named { lists: BTreeMap<String, Vec<Color>> },
    Ordered { lists: Vec<Vec<Color>> },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ColoringJson {
    pub fold: usize,
    pub assignment: BTreeMap<String, Vec<Color>>,
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    // accept either the explicit schema or a theta description
    if let Ok(t) = serde_json::from_str::<ThetaJson>(text) {
        return Ok(ThetaGraph::new(t.theta.lengths)?.to_graph());
    }
    let g: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::new(g.vertices, g.edges)?)
}

pub fn graph_to_json(graph: &Graph) -> GraphJson {
    GraphJson {
        vertices: graph.vertices().map(str::to_owned).collect(),
        edges: graph
            .edges()
            .map(|(a, b)| (a.to_owned(), b.to_owned()))
            .collect(),
    }
}

pub fn theta_from_json(text: &str) -> Result<ThetaGraph, IoError> {
    let t: ThetaJson = serde_json::from_str(text)?;
    Ok(ThetaGraph::new(t.theta.lengths)?)
}

pub fn named_lists_from_json(text: &str) -> Result<ListAssignment, IoError> {
    match serde_json::from_str::<ListsJson>(text)? {
        ListsJson::Named { lists } => Ok(ListAssignment::new(
            lists
                .into_iter()
                .map(|(v, cs)| (v, cs.into_iter().collect::<ColorSet>()))
                .collect(),
        )),
        ListsJson::Ordered { .. } => Err(IoError::Schema(
            "expected vertex-keyed lists, got an ordered array".into(),
        )),
    }
}

/// Ordered lists for path/cycle commands; vertex-keyed input is rejected
/// because those commands need an explicit vertex order.
pub fn ordered_lists_from_json(text: &str) -> Result<Vec<ColorSet>, IoError> {
    match serde_json::from_str::<ListsJson>(text)? {
        ListsJson::Ordered { lists } => Ok(lists
            .into_iter()
            .map(|cs| cs.into_iter().collect())
            .collect()),
        ListsJson::Named { .. } => Err(IoError::Schema(
            "expected an ordered array of lists, got vertex-keyed lists".into(),
        )),
    }
}

pub fn lists_to_json(lists: &ListAssignment) -> ListsJson {
    ListsJson::Named {
        lists: lists
            .lists
            .iter()
            .map(|(v, cs)| (v.clone(), cs.iter().copied().collect()))
            .collect(),
    }
}

pub fn coloring_from_json(text: &str) -> Result<FoldColoring, IoError> {
    let c: ColoringJson = serde_json::from_str(text)?;
    let mut phi = FoldColoring::new(c.fold);
    for (v, cs) in c.assignment {
        phi.assignment.insert(v, cs.into_iter().collect());
    }
    Ok(phi)
}

pub fn coloring_to_json(phi: &FoldColoring) -> ColoringJson {
    ColoringJson {
        fold: phi.fold,
        assignment: phi
            .assignment
            .iter()
            .map(|(v, cs)| (v.clone(), cs.iter().copied().collect()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip() {
        let text = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#;
        let g = graph_from_json(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        let back = serde_json::to_string(&graph_to_json(&g)).unwrap();
        let again = graph_from_json(&back).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn theta_accepted_as_graph() {
        let text = r#"{"theta":{"lengths":[4,4,4]}}"#;
        let g = graph_from_json(text).unwrap();
        assert_eq!(g.vertex_count(), 11);
        assert!(theta_from_json(text).is_ok());
    }

    #[test]
    fn lists_forms() {
        let named = r#"{"lists":{"u":[2,1],"v":[3]}}"#;
        let l = named_lists_from_json(named).unwrap();
        assert_eq!(l.get("u").unwrap().len(), 2);
        assert!(ordered_lists_from_json(named).is_err());

        let ordered = r#"{"lists":[[1,2],[2,3],[3,4]]}"#;
        let l = ordered_lists_from_json(ordered).unwrap();
        assert_eq!(l.len(), 3);
        assert!(named_lists_from_json(ordered).is_err());
    }

    #[test]
    fn coloring_roundtrip() {
        let text = r#"{"fold":2,"assignment":{"u":[0,3],"v":[1,2]}}"#;
        let phi = coloring_from_json(text).unwrap();
        assert_eq!(phi.fold, 2);
        let back = serde_json::to_string(&coloring_to_json(&phi)).unwrap();
        assert_eq!(coloring_from_json(&back).unwrap(), phi);
    }
}
