//! Simple undirected graphs with string vertex ids.

use std::collections::BTreeSet;
use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("parallel edge {0:?} -- {1:?}")]
    ParallelEdge(String, String),
    #[error("edge endpoint {0:?} is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
}

/// An undirected graph without loops or parallel edges.
///
/// Vertices keep their declaration order; all iteration an algorithm may
/// observe (vertices, edges, neighbours) is deterministic.
#[derive(Debug, Clone)]
pub struct Graph {
    verts: Vec<String>,
    index: HashMap<String, usize>,
    /// Edges as index pairs with lo < hi, sorted.
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        // index and adj are derived; vertex order and edge set decide
        self.verts == other.verts && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let verts: Vec<String> = vertices.into_iter().collect();
        let mut index = HashMap::new();
        for (i, v) in verts.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut g = Graph {
            adj: vec![Vec::new(); verts.len()],
            verts,
            index,
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            g.add_edge(&a, &b)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let ia = *self
            .index
            .get(a)
            .ok_or_else(|| GraphError::UnknownEndpoint(a.to_owned()))?;
        let ib = *self
            .index
            .get(b)
            .ok_or_else(|| GraphError::UnknownEndpoint(b.to_owned()))?;
        if ia == ib {
            return Err(GraphError::SelfLoop(a.to_owned()));
        }
        let key = (ia.min(ib), ia.max(ib));
        if !self.edges.insert(key) {
            return Err(GraphError::ParallelEdge(a.to_owned(), b.to_owned()));
        }
        self.adj[ia].push(ib);
        self.adj[ib].push(ia);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.verts.iter().map(|s| s.as_str())
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.verts[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Edges as (name, name) pairs in sorted index order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges
            .iter()
            .map(move |&(a, b)| (self.verts[a].as_str(), self.verts[b].as_str()))
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Induced subgraph on the given vertex indices (declaration order kept).
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let verts: Vec<String> = keep.iter().map(|&i| self.verts[i].clone()).collect();
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (self.verts[a].clone(), self.verts[b].clone()))
            .collect();
        Graph::new(verts, edges).expect("induced subgraph of a valid graph is valid")
    }

    /// Graph with one edge removed. Panics if the edge is absent.
    pub fn without_edge(&self, a: usize, b: usize) -> Graph {
        let key = (a.min(b), a.max(b));
        assert!(self.edges.contains(&key), "edge not present");
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .filter(|&&e| e != key)
            .map(|&(x, y)| (self.verts[x].clone(), self.verts[y].clone()))
            .collect();
        Graph::new(self.verts.clone(), edges).expect("edge removal keeps the graph valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.verts.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.verts.len()
    }

    /// Connected components as induced subgraphs, in order of their first
    /// vertex.
    pub fn components(&self) -> Vec<Graph> {
        let n = self.verts.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut stack = vec![root];
            seen[root] = true;
            let mut members = BTreeSet::new();
            members.insert(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        members.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(self.induced(&members));
        }
        out
    }

    /// 2-edge-connectivity for connected graphs: no bridge edge.
    pub fn has_bridge(&self) -> bool {
        // DFS lowpoint computation.
        let n = self.verts.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut bridge = false;
        // Iterative DFS with explicit parent tracking.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, parent, ref mut ei)) = stack.last_mut() {
                if *ei == 0 {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                }
                if *ei < self.adj[v].len() {
                    let w = self.adj[v][*ei];
                    *ei += 1;
                    if disc[w] == usize::MAX {
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridge = true;
                        }
                    }
                }
            }
        }
        bridge
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rejects_self_loop_and_parallel() {
        let e = Graph::new(names(&["a", "b"]), vec![("a".into(), "a".into())]);
        assert_eq!(e.unwrap_err(), GraphError::SelfLoop("a".into()));
        let e = Graph::new(
            names(&["a", "b"]),
            vec![("a".into(), "b".into()), ("b".into(), "a".into())],
        );
        assert_eq!(
            e.unwrap_err(),
            GraphError::ParallelEdge("b".into(), "a".into())
        );
    }

    #[test]
    fn rejects_unknown_endpoint() {
        let e = Graph::new(names(&["a"]), vec![("a".into(), "z".into())]);
        assert_eq!(e.unwrap_err(), GraphError::UnknownEndpoint("z".into()));
    }

    #[test]
    fn bridge_detection() {
        // Two triangles joined by an edge: the join is a bridge.
        let g = Graph::new(
            names(&["a", "b", "c", "x", "y", "z"]),
            vec![
                ("a".into(), "b".into()),
                ("b".into(), "c".into()),
                ("c".into(), "a".into()),
                ("x".into(), "y".into()),
                ("y".into(), "z".into()),
                ("z".into(), "x".into()),
                ("a".into(), "x".into()),
            ],
        )
        .unwrap();
        assert!(g.has_bridge());
        let c4 = Graph::new(
            names(&["a", "b", "c", "d"]),
            vec![
                ("a".into(), "b".into()),
                ("b".into(), "c".into()),
                ("c".into(), "d".into()),
                ("d".into(), "a".into()),
            ],
        )
        .unwrap();
        assert!(!c4.has_bridge());
    }
}
