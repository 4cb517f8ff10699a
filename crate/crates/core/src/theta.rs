//! Generalized theta graphs: two hubs joined by internally disjoint paths.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThetaError {
    #[error("a theta graph needs at least 3 paths, got {0}")]
    TooFewPaths(usize),
    #[error("path lengths must be positive")]
    ZeroLength,
    #[error("at most one path may have length 1 (two would be parallel edges)")]
    ParallelEdges,
}

/// Θ_{k_1,…,k_q}: internally vertex-disjoint u–v paths of lengths k_i.
///
/// Vertex naming is fixed: hubs `u` and `v`, and `p{i}_{j}` for the j-th
/// internal vertex (1-based) of the i-th path (0-based). Path i has
/// `n_i = k_i - 1` internal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaGraph {
    lengths: Vec<usize>,
}

impl ThetaGraph {
    pub fn new(lengths: Vec<usize>) -> Result<Self, ThetaError> {
        if lengths.len() < 3 {
            return Err(ThetaError::TooFewPaths(lengths.len()));
        }
        if lengths.iter().any(|&k| k == 0) {
            return Err(ThetaError::ZeroLength);
        }
        if lengths.iter().filter(|&&k| k == 1).count() > 1 {
            return Err(ThetaError::ParallelEdges);
        }
        Ok(ThetaGraph { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn path_count(&self) -> usize {
        self.lengths.len()
    }

    /// Number of internal vertices of path i.
    pub fn internal_len(&self, i: usize) -> usize {
        self.lengths[i] - 1
    }

    /// Internal vertex names of path i, in order from the u side.
    pub fn internal_path(&self, i: usize) -> Vec<String> {
        (1..=self.internal_len(i))
            .map(|j| format!("p{i}_{j}"))
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.lengths.iter().map(|k| k - 1).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn to_graph(&self) -> Graph {
        let mut verts = vec!["u".to_string(), "v".to_string()];
        let mut edges = Vec::new();
        for (i, &k) in self.lengths.iter().enumerate() {
            let n = k - 1;
            if n == 0 {
                edges.push(("u".to_string(), "v".to_string()));
                continue;
            }
            for j in 1..=n {
                verts.push(format!("p{i}_{j}"));
            }
            edges.push(("u".to_string(), format!("p{i}_1")));
            for j in 1..n {
                edges.push((format!("p{i}_{j}"), format!("p{i}_{}", j + 1)));
            }
            edges.push((format!("p{i}_{n}"), "v".to_string()));
        }
        Graph::new(verts, edges).expect("theta expansion is a valid graph")
    }
}

/// `build_theta` from a list of path lengths.
pub fn build_theta(lengths: Vec<usize>) -> Result<ThetaGraph, ThetaError> {
    ThetaGraph::new(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_444_counts() {
        let t = build_theta(vec![4, 4, 4]).unwrap();
        let g = t.to_graph();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn theta_2222_counts() {
        let t = build_theta(vec![2, 2, 2, 2]).unwrap();
        let g = t.to_graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            build_theta(vec![4, 4]).unwrap_err(),
            ThetaError::TooFewPaths(2)
        );
        assert_eq!(
            build_theta(vec![1, 1, 3]).unwrap_err(),
            ThetaError::ParallelEdges
        );
    }

    #[test]
    fn counts_match_formula_for_small_lengths() {
        for a in 1..=9usize {
            for b in 2..=9usize {
                for c in 2..=9usize {
                    let t = build_theta(vec![a, b, c]).unwrap();
                    let g = t.to_graph();
                    assert_eq!(g.vertex_count(), 2 + (a - 1) + (b - 1) + (c - 1));
                    assert_eq!(g.edge_count(), a + b + c);
                }
            }
        }
    }

    #[test]
    fn length_one_path_is_hub_edge() {
        let t = build_theta(vec![1, 3, 3]).unwrap();
        let g = t.to_graph();
        let u = g.vertex_index("u").unwrap();
        let v = g.vertex_index("v").unwrap();
        assert!(g.has_edge(u, v));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
    }
}
