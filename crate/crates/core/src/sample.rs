//! Seeded instance generators for sweeps and the acceptance suite.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::lists::{Color, ColorSet, ListAssignment};
use crate::oracle::random_subset;
use crate::theta::ThetaGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform-size lists for every vertex, drawn from 0..palette.
pub fn random_lists<R: Rng>(
    rng: &mut R,
    graph: &Graph,
    size: usize,
    palette: usize,
) -> ListAssignment {
    let pool: Vec<Color> = (0..palette as Color).collect();
    let mut la = ListAssignment::default();
    for v in graph.vertices() {
        la.set(v, random_subset(rng, &pool, size));
    }
    la
}

/// Ordered lists for a path or cycle of `n` vertices.
pub fn random_ordered_lists<R: Rng>(rng: &mut R, sizes: &[usize], palette: usize) -> Vec<ColorSet> {
    let pool: Vec<Color> = (0..palette as Color).collect();
    sizes
        .iter()
        .map(|&s| random_subset(rng, &pool, s))
        .collect()
}

/// A connected graph with minimum degree 2 on 3..=max_n vertices, by
/// rejection sampling over random edge sets.
pub fn random_min_degree2_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(3..=max_n);
        let p = rng.gen_range(0.3..0.9);
        let verts: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((format!("g{i}"), format!("g{j}")));
                }
            }
        }
        let Ok(g) = Graph::new(verts, edges) else {
            continue;
        };
        if g.is_connected() && (0..n).all(|i| g.degree(i) >= 2) {
            return g;
        }
    }
}

/// Structured list families used as adversarial solver inputs.
pub enum AdversarialKind {
    /// The same list everywhere.
    AllEqual,
    /// Pairwise-disjoint lists: no colour repeats across vertices.
    PairwiseDisjoint,
    /// The hub lists reappear on every path vertex, padded with shared
    /// extra colours.
    HubFocused,
}

pub fn adversarial_lists(theta: &ThetaGraph, size: usize, kind: AdversarialKind) -> ListAssignment {
    let g = theta.to_graph();
    let mut la = ListAssignment::default();
    match kind {
        AdversarialKind::AllEqual => {
            let list: ColorSet = (0..size as Color).collect();
            for v in g.vertices() {
                la.set(v, list.clone());
            }
        }
        AdversarialKind::PairwiseDisjoint => {
            let mut next: Color = 0;
            for v in g.vertices() {
                let list: ColorSet = (next..next + size as Color).collect();
                next += size as Color;
                la.set(v, list);
            }
        }
        AdversarialKind::HubFocused => {
            // hub lists overlap in all but one colour and reappear on the
            // path vertices, alternating by position
            let lu: ColorSet = (0..size as Color).collect();
            let lv: ColorSet = (1..=size as Color).collect();
            la.set("u", lu.clone());
            la.set("v", lv.clone());
            for (pos, v) in g.vertices().filter(|v| *v != "u" && *v != "v").enumerate() {
                la.set(v, if pos % 2 == 0 { lu.clone() } else { lv.clone() });
            }
        }
    }
    la
}

/// All members of the five critical families with at most `max_vertices`
/// vertices, as (description, graph) pairs.
pub fn critical_family_members(max_vertices: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();

    // odd cycles
    let mut n = 3;
    while n <= max_vertices {
        out.push((format!("C{n}"), cycle_graph(n)));
        n += 2;
    }

    // theta graphs: even (r >= 1, s,t > 1), odd (r >= 0, s,t > 0), and 2,2,2,2t
    for a in 1..=max_vertices {
        for b in a..=max_vertices {
            for c in b..=max_vertices {
                let Ok(theta) = ThetaGraph::new(vec![a, b, c]) else {
                    continue;
                };
                if theta.vertex_count() > max_vertices {
                    continue;
                }
                let all_even = [a, b, c].iter().all(|k| k % 2 == 0);
                let all_odd = [a, b, c].iter().all(|k| k % 2 == 1);
                // even thetas need the two larger lengths >= 4 to be critical
                if (all_even && b >= 4) || all_odd {
                    out.push((format!("Theta_{a},{b},{c}"), theta.to_graph()));
                }
            }
        }
    }
    let mut t = 1;
    loop {
        let theta = ThetaGraph::new(vec![2, 2, 2, 2 * t]).unwrap();
        if theta.vertex_count() > max_vertices {
            break;
        }
        out.push((format!("Theta_2,2,2,{}", 2 * t), theta.to_graph()));
        t += 1;
    }

    // two even cycles sharing a vertex
    for a in (4..=max_vertices).step_by(2) {
        for b in (a..=max_vertices).step_by(2) {
            if a + b - 1 > max_vertices {
                continue;
            }
            out.push((format!("C{a}.C{b}"), cycles_sharing_vertex(a, b)));
        }
    }

    // two vertex-disjoint even cycles joined by a path of length >= 1
    for a in (4..=max_vertices).step_by(2) {
        for b in (a..=max_vertices).step_by(2) {
            for path_len in 1..=max_vertices {
                let total = a + b + path_len - 1;
                if total > max_vertices {
                    continue;
                }
                out.push((
                    format!("C{a}-P{path_len}-C{b}"),
                    cycles_joined_by_path(a, b, path_len),
                ));
            }
        }
    }

    out
}

pub fn cycle_graph(n: usize) -> Graph {
    let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String)> = (0..n)
        .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n)))
        .collect();
    Graph::new(verts, edges).expect("cycle is valid")
}

pub fn cycles_sharing_vertex(a: usize, b: usize) -> Graph {
    let mut verts = vec!["w".to_string()];
    verts.extend((1..a).map(|i| format!("a{i}")));
    verts.extend((1..b).map(|i| format!("b{i}")));
    let mut edges = Vec::new();
    for (prefix, len) in [("a", a), ("b", b)] {
        edges.push(("w".to_string(), format!("{prefix}1")));
        for i in 1..len - 1 {
            edges.push((format!("{prefix}{i}"), format!("{prefix}{}", i + 1)));
        }
        edges.push((format!("{prefix}{}", len - 1), "w".to_string()));
    }
    Graph::new(verts, edges).expect("shared-vertex cycles are valid")
}

pub fn cycles_joined_by_path(a: usize, b: usize, path_len: usize) -> Graph {
    let mut verts: Vec<String> = (0..a).map(|i| format!("a{i}")).collect();
    verts.extend((0..b).map(|i| format!("b{i}")));
    verts.extend((1..path_len).map(|i| format!("p{i}")));
    let mut edges: Vec<(String, String)> = (0..a)
        .map(|i| (format!("a{i}"), format!("a{}", (i + 1) % a)))
        .collect();
    edges.extend((0..b).map(|i| (format!("b{i}"), format!("b{}", (i + 1) % b))));
    let mut prev = "a0".to_string();
    for i in 1..path_len {
        edges.push((prev.clone(), format!("p{i}")));
        prev = format!("p{i}");
    }
    edges.push((prev, "b0".to_string()));
    Graph::new(verts, edges).expect("joined cycles are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, Family};

    #[test]
    fn generated_members_classify_into_their_families() {
        for (name, g) in critical_family_members(12) {
            let c = classify(&g);
            assert!(c.three_choice_critical, "{name} should be critical");
            assert!(!c.two_choosable, "critical graphs are never 2-choosable");
            let family = c.family.unwrap();
            let matches_name = match family {
                Family::OddCycle => name.starts_with('C') && !name.contains(['.', '-']),
                Family::TwoCyclesVertex => name.contains('.'),
                Family::TwoCyclesPath => name.contains("-P"),
                Family::Theta2222t => name.starts_with("Theta_2,2,2,"),
                Family::ThetaEven | Family::ThetaOdd => {
                    name.starts_with("Theta_") && !name.starts_with("Theta_2,2,2,")
                }
            };
            assert!(matches_name, "{name} classified as {family:?}");
        }
    }

    #[test]
    fn min_degree2_sampler_properties() {
        let mut r = rng(5);
        for _ in 0..20 {
            let g = random_min_degree2_graph(&mut r, 7);
            assert!(g.is_connected());
            assert!((0..g.vertex_count()).all(|i| g.degree(i) >= 2));
            assert!(g.vertex_count() <= 7);
        }
    }

    #[test]
    fn member_count_is_stable() {
        // the <= 12-vertex corpus: counted once by hand, pinned here
        let members = critical_family_members(12);
        let odd_cycles = members
            .iter()
            .filter(|(n, _)| n.starts_with('C') && !n.contains('.') && !n.contains('-'))
            .count();
        assert_eq!(odd_cycles, 5); // C3 C5 C7 C9 C11
        assert!(members.iter().any(|(n, _)| n == "Theta_4,4,4"));
        assert!(members.iter().any(|(n, _)| n == "Theta_2,2,2,8"));
        assert!(members.iter().any(|(n, _)| n == "C4.C8"));
        assert!(members.iter().any(|(n, _)| n == "C4-P4-C4"));
    }
}
