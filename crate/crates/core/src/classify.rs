//! Graph core and the structural classification: which graphs are
//! 2-choosable, and which are 3-choice-critical (and in which family).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;

/// The five 3-choice-critical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    OddCycle,
    /// Two vertex-disjoint even cycles joined by a path.
    TwoCyclesPath,
    /// Two even cycles sharing one vertex.
    TwoCyclesVertex,
    /// Θ_{2r,2s,2t} with r ≥ 1 and s,t > 1.
    ThetaEven,
    /// Θ_{2r+1,2s+1,2t+1} with r ≥ 0 and s,t > 0.
    ThetaOdd,
    /// Θ_{2,2,2,2t} with t ≥ 1.
    Theta2222t,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub core: Graph,
    pub two_choosable: bool,
    pub three_choice_critical: bool,
    pub family: Option<Family>,
}

/// Repeatedly delete degree-1 vertices. If nothing with an edge survives
/// the fixed point (trees, forests, isolated vertices), the core is K_1.
pub fn core_of(graph: &Graph) -> Graph {
    let n = graph.vertex_count();
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = (0..n).map(|i| graph.degree(i)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    while let Some(v) = queue.pop() {
        if removed[v] || degree[v] != 1 {
            continue;
        }
        removed[v] = true;
        for &w in graph.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    let keep: BTreeSet<usize> = (0..n).filter(|&i| !removed[i] && degree[i] >= 2).collect();
    if keep.is_empty() {
        let name = graph
            .vertices()
            .next()
            .map(str::to_owned)
            .unwrap_or_else(|| "k1".to_owned());
        return Graph::new(vec![name], Vec::new()).expect("a single vertex is a valid graph");
    }
    graph.induced(&keep)
}

fn is_cycle(graph: &Graph) -> Option<usize> {
    let n = graph.vertex_count();
    if n < 3 || !graph.is_connected() {
        return None;
    }
    if (0..n).all(|i| graph.degree(i) == 2) {
        Some(n)
    } else {
        None
    }
}

/// Walk from `start` (a neighbour of `from`) along degree-2 vertices until
/// a vertex of degree != 2 is reached. Returns (endpoint, edges walked,
/// interior vertices visited).
fn walk_from(graph: &Graph, from: usize, start: usize) -> (usize, usize, Vec<usize>) {
    let mut prev = from;
    let mut here = start;
    let mut steps = 1;
    let mut interior = Vec::new();
    while graph.degree(here) == 2 {
        interior.push(here);
        let next = graph
            .neighbors(here)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree-2 vertex has another neighbour");
        prev = here;
        here = next;
        steps += 1;
    }
    (here, steps, interior)
}

/// Decompose a connected graph with exactly two vertices of degree q >= 3
/// (all others of degree 2) into the q path lengths between them.
fn theta_lengths(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return None;
    }
    let hubs: Vec<usize> = (0..n).filter(|&i| graph.degree(i) >= 3).collect();
    if hubs.len() != 2 {
        return None;
    }
    let (u, v) = (hubs[0], hubs[1]);
    if graph.degree(u) != graph.degree(v) {
        return None;
    }
    if (0..n).any(|i| i != u && i != v && graph.degree(i) != 2) {
        return None;
    }
    let mut lengths = Vec::new();
    let mut covered = 2usize;
    for &start in graph.neighbors(u) {
        if start == v {
            lengths.push(1);
            continue;
        }
        let (end, steps, interior) = walk_from(graph, u, start);
        if end != v {
            return None; // walked back to u: a cycle hangs off one hub
        }
        lengths.push(steps);
        covered += interior.len();
    }
    if covered != n {
        return None;
    }
    lengths.sort_unstable();
    Some(lengths)
}

/// Two even cycles sharing exactly one vertex: one degree-4 vertex, the
/// rest degree 2.
fn two_cycles_vertex(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return false;
    }
    let centers: Vec<usize> = (0..n).filter(|&i| graph.degree(i) == 4).collect();
    if centers.len() != 1 || (0..n).any(|i| i != centers[0] && graph.degree(i) != 2) {
        return false;
    }
    let w = centers[0];
    // walk each direction; each cycle is traversed twice, once per end
    let mut cycle_lengths = Vec::new();
    let mut seen_starts: BTreeSet<usize> = BTreeSet::new();
    for &start in graph.neighbors(w) {
        if seen_starts.contains(&start) {
            continue;
        }
        let (end, steps, interior) = walk_from(graph, w, start);
        if end != w {
            return false;
        }
        // the far end of this walk is another neighbour of w; skip its copy
        if let Some(&last) = interior.last() {
            seen_starts.insert(last);
        }
        cycle_lengths.push(steps);
    }
    cycle_lengths.len() == 2
        && cycle_lengths.iter().all(|&l| l % 2 == 0 && l >= 4)
        && cycle_lengths.iter().map(|&l| l - 1).sum::<usize>() + 1 == n
}

/// Two vertex-disjoint even cycles joined by a path (length >= 1).
fn two_cycles_path(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    if !graph.is_connected() {
        return false;
    }
    let joints: Vec<usize> = (0..n).filter(|&i| graph.degree(i) == 3).collect();
    if joints.len() != 2 || (0..n).any(|i| !joints.contains(&i) && graph.degree(i) != 2) {
        return false;
    }
    let mut cycles = 0usize;
    let mut connectors = 0usize;
    let mut covered = 2usize;
    for (ji, &w) in joints.iter().enumerate() {
        let other = joints[1 - ji];
        let mut seen_starts: BTreeSet<usize> = BTreeSet::new();
        for &start in graph.neighbors(w) {
            if start == other {
                connectors += 1; // direct joining edge, counted from both sides
                continue;
            }
            if seen_starts.contains(&start) {
                continue;
            }
            let (end, steps, interior) = walk_from(graph, w, start);
            if end == w {
                // a cycle at this joint, traversed once from each end
                if let Some(&last) = interior.last() {
                    seen_starts.insert(last);
                }
                if steps % 2 != 0 || steps < 4 {
                    return false;
                }
                cycles += 1;
                covered += interior.len();
            } else {
                connectors += 1;
                // the connecting path is walked from both joints; count
                // its interior once
                if ji == 0 {
                    covered += interior.len();
                }
            }
        }
    }
    cycles == 2 && connectors == 2 && covered == n
}

pub fn is_2_choosable(graph: &Graph) -> bool {
    // a graph is 2-choosable iff every component is; reduce each
    // component's core against the list
    let core = core_of(graph);
    if core.edge_count() == 0 {
        return true;
    }
    core.components().iter().all(|comp| {
        if comp.edge_count() == 0 {
            return true;
        }
        if let Some(n) = is_cycle(comp) {
            return n % 2 == 0;
        }
        if let Some(lengths) = theta_lengths(comp) {
            return lengths.len() == 3 && lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0;
        }
        false
    })
}

pub fn classify(graph: &Graph) -> Classification {
    let core = core_of(graph);
    let two_choosable = is_2_choosable(graph);
    let family = critical_family(graph);
    Classification {
        core,
        two_choosable,
        three_choice_critical: family.is_some(),
        family,
    }
}

/// Match the graph against the five critical families. Criticality forces
/// minimum degree 2, so any graph with a pendant or isolated vertex is
/// immediately out.
fn critical_family(graph: &Graph) -> Option<Family> {
    let n = graph.vertex_count();
    if n == 0 || !graph.is_connected() {
        return None;
    }
    if (0..n).any(|i| graph.degree(i) < 2) {
        return None;
    }
    let cycle_dim = graph.edge_count() + 1 - n;
    match cycle_dim {
        1 => is_cycle(graph).and_then(|len| (len % 2 == 1).then_some(Family::OddCycle)),
        2 => {
            if let Some(lengths) = theta_lengths(graph) {
                if lengths.len() != 3 {
                    return None;
                }
                let all_even = lengths.iter().all(|&k| k % 2 == 0);
                let all_odd = lengths.iter().all(|&k| k % 2 == 1);
                if all_even && lengths[1] >= 4 {
                    // Θ_{2r,2s,2t} with s,t > 1; Θ_{2,2,2p} is 2-choosable
                    return Some(Family::ThetaEven);
                }
                if all_odd {
                    return Some(Family::ThetaOdd);
                }
                return None;
            }
            if two_cycles_vertex(graph) {
                return Some(Family::TwoCyclesVertex);
            }
            if two_cycles_path(graph) {
                return Some(Family::TwoCyclesPath);
            }
            None
        }
        3 => theta_lengths(graph).and_then(|lengths| {
            (lengths.len() == 4 && lengths[..3].iter().all(|&k| k == 2) && lengths[3] % 2 == 0)
                .then_some(Family::Theta2222t)
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::build_theta;

    fn cycle(n: usize) -> Graph {
        let verts: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (format!("c{i}"), format!("c{}", (i + 1) % n)))
            .collect();
        Graph::new(verts, edges).unwrap()
    }

    fn with_pendant(g: &Graph, attach: &str) -> Graph {
        let mut verts: Vec<String> = g.vertices().map(str::to_owned).collect();
        verts.push("pendant".into());
        let mut edges: Vec<(String, String)> = g
            .edges()
            .map(|(a, b)| (a.to_owned(), b.to_owned()))
            .collect();
        edges.push((attach.to_owned(), "pendant".into()));
        Graph::new(verts, edges).unwrap()
    }

    #[test]
    fn core_examples() {
        let c6 = cycle(6);
        let g = with_pendant(&c6, "c0");
        let core = core_of(&g);
        assert_eq!(core.vertex_count(), 6);
        assert_eq!(core.edge_count(), 6);

        // a path is a tree: core K_1
        let path = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![("a".into(), "b".into()), ("b".into(), "c".into())],
        )
        .unwrap();
        let core = core_of(&path);
        assert_eq!(core.vertex_count(), 1);
        assert_eq!(core.edge_count(), 0);

        let theta = build_theta(vec![2, 2, 4]).unwrap().to_graph();
        assert_eq!(core_of(&theta), theta);
    }

    #[test]
    fn ert_list() {
        assert!(is_2_choosable(
            &build_theta(vec![2, 2, 4]).unwrap().to_graph()
        ));
        assert!(is_2_choosable(
            &build_theta(vec![2, 2, 2]).unwrap().to_graph()
        ));
        assert!(!is_2_choosable(
            &build_theta(vec![2, 2, 2, 2]).unwrap().to_graph()
        ));
        assert!(is_2_choosable(&cycle(6)));
        assert!(!is_2_choosable(&cycle(5)));
        assert!(is_2_choosable(&with_pendant(&cycle(6), "c0")));
        assert!(!is_2_choosable(
            &build_theta(vec![4, 4, 4]).unwrap().to_graph()
        ));
    }

    #[test]
    fn family_recognition() {
        assert_eq!(classify(&cycle(5)).family, Some(Family::OddCycle));
        assert_eq!(classify(&cycle(6)).family, None);
        assert_eq!(
            classify(&build_theta(vec![4, 4, 4]).unwrap().to_graph()).family,
            Some(Family::ThetaEven)
        );
        assert_eq!(
            classify(&build_theta(vec![2, 4, 4]).unwrap().to_graph()).family,
            Some(Family::ThetaEven)
        );
        assert_eq!(
            classify(&build_theta(vec![2, 2, 4]).unwrap().to_graph()).family,
            None
        );
        assert_eq!(
            classify(&build_theta(vec![3, 3, 3]).unwrap().to_graph()).family,
            Some(Family::ThetaOdd)
        );
        assert_eq!(
            classify(&build_theta(vec![1, 3, 3]).unwrap().to_graph()).family,
            Some(Family::ThetaOdd)
        );
        assert_eq!(
            classify(&build_theta(vec![2, 3, 4]).unwrap().to_graph()).family,
            None
        );
        assert_eq!(
            classify(&build_theta(vec![2, 2, 2, 2]).unwrap().to_graph()).family,
            Some(Family::Theta2222t)
        );
        assert_eq!(
            classify(&build_theta(vec![2, 2, 2, 6]).unwrap().to_graph()).family,
            Some(Family::Theta2222t)
        );
        assert_eq!(
            classify(&build_theta(vec![2, 2, 4, 4]).unwrap().to_graph()).family,
            None
        );
    }

    #[test]
    fn two_cycle_families() {
        // two C4's sharing vertex "w"
        let mut verts: Vec<String> = vec!["w".into()];
        verts.extend((0..3).map(|i| format!("a{i}")));
        verts.extend((0..3).map(|i| format!("b{i}")));
        let edges: Vec<(String, String)> = vec![
            ("w".into(), "a0".into()),
            ("a0".into(), "a1".into()),
            ("a1".into(), "a2".into()),
            ("a2".into(), "w".into()),
            ("w".into(), "b0".into()),
            ("b0".into(), "b1".into()),
            ("b1".into(), "b2".into()),
            ("b2".into(), "w".into()),
        ];
        let shared = Graph::new(verts, edges).unwrap();
        assert_eq!(classify(&shared).family, Some(Family::TwoCyclesVertex));

        // two C4's joined by a single edge
        let mut verts: Vec<String> = (0..4).map(|i| format!("a{i}")).collect();
        verts.extend((0..4).map(|i| format!("b{i}")));
        let mut edges: Vec<(String, String)> = (0..4)
            .map(|i| (format!("a{i}"), format!("a{}", (i + 1) % 4)))
            .collect();
        edges.extend((0..4).map(|i| (format!("b{i}"), format!("b{}", (i + 1) % 4))));
        edges.push(("a0".into(), "b0".into()));
        let joined = Graph::new(verts, edges).unwrap();
        assert_eq!(classify(&joined).family, Some(Family::TwoCyclesPath));

        // odd cycles sharing a vertex are not in the list
        let mut verts: Vec<String> = vec!["w".into()];
        verts.extend((0..2).map(|i| format!("a{i}")));
        verts.extend((0..2).map(|i| format!("b{i}")));
        let edges: Vec<(String, String)> = vec![
            ("w".into(), "a0".into()),
            ("a0".into(), "a1".into()),
            ("a1".into(), "w".into()),
            ("w".into(), "b0".into()),
            ("b0".into(), "b1".into()),
            ("b1".into(), "w".into()),
        ];
        let odd_shared = Graph::new(verts, edges).unwrap();
        assert_eq!(classify(&odd_shared).family, None);
    }

    #[test]
    fn disconnected_cores_check_componentwise() {
        // two disjoint C4's: every component 2-choosable
        let mut verts: Vec<String> = (0..4).map(|i| format!("a{i}")).collect();
        verts.extend((0..4).map(|i| format!("b{i}")));
        let mut edges: Vec<(String, String)> = (0..4)
            .map(|i| (format!("a{i}"), format!("a{}", (i + 1) % 4)))
            .collect();
        edges.extend((0..4).map(|i| (format!("b{i}"), format!("b{}", (i + 1) % 4))));
        let two_c4 = Graph::new(verts.clone(), edges.clone()).unwrap();
        assert!(is_2_choosable(&two_c4));
        assert!(!classify(&two_c4).three_choice_critical);

        // C4 plus a disjoint triangle is not
        let mut verts: Vec<String> = (0..4).map(|i| format!("a{i}")).collect();
        verts.extend((0..3).map(|i| format!("t{i}")));
        let mut edges: Vec<(String, String)> = (0..4)
            .map(|i| (format!("a{i}"), format!("a{}", (i + 1) % 4)))
            .collect();
        edges.extend((0..3).map(|i| (format!("t{i}"), format!("t{}", (i + 1) % 3))));
        let mixed = Graph::new(verts, edges).unwrap();
        assert!(!is_2_choosable(&mixed));
    }

    #[test]
    fn pendant_blocks_criticality() {
        let g = with_pendant(&cycle(5), "c0");
        let c = classify(&g);
        assert!(!c.three_choice_critical);
        assert!(!c.two_choosable);
    }
}
