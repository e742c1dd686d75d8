#![allow(dead_code)]

use std::collections::BTreeSet;

use ohl_core::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexId};
use ohl_core::labeling::Labeling;
use rand::Rng;

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
    Graph::build(vertices, edges).unwrap()
}

/// Builds a graph on the first `n` of [`NAMES`] from the pair mask `bits`
/// (bit `i` selects the `i`-th pair in lexicographic order).
pub fn graph_from_mask(n: usize, bits: u64) -> Graph {
    let pairs = pairs(n);
    let edges: Vec<(&str, &str)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &(u, v))| (NAMES[u], NAMES[v]))
        .collect();
    graph(&NAMES[..n], &edges)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = pairs(n).len();
    (0..1u64 << m).map(move |bits| graph_from_mask(n, bits))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let bits = pairs(n).iter().enumerate().fold(0u64, |acc, (i, _)| if rng.gen_bool(p) { acc | 1 << i } else { acc });
    graph_from_mask(n, bits)
}

/// All shortest `u`-`v` paths, by enumerating every simple path.
pub fn shortest_paths(g: &Graph, u: VertexId, v: VertexId) -> Vec<Vec<VertexId>> {
    fn walk(g: &Graph, target: VertexId, path: &mut Vec<VertexId>, seen: &mut Vec<bool>, out: &mut Vec<Vec<VertexId>>) {
        let last = *path.last().unwrap();
        if last == target {
            out.push(path.clone());
            return;
        }
        for &x in g.neighbors(last) {
            if !seen[x] {
                seen[x] = true;
                path.push(x);
                walk(g, target, path, seen, out);
                path.pop();
                seen[x] = false;
            }
        }
    }
    let mut all = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    walk(g, v, &mut vec![u], &mut seen, &mut all);
    let Some(best) = all.iter().map(Vec::len).min() else {
        return Vec::new();
    };
    all.retain(|p| p.len() == best);
    all
}

/// Oracle coverage status: some common hub lies on an enumerated shortest path.
pub fn oracle_covered(g: &Graph, l: &Labeling, u: VertexId, v: VertexId) -> Option<bool> {
    let paths = shortest_paths(g, u, v);
    if paths.is_empty() {
        return None;
    }
    let on_path: BTreeSet<VertexId> = paths.into_iter().flatten().collect();
    Some(on_path.iter().any(|&x| l.contains(u, x) && l.contains(v, x)))
}

/// Each reachable hub is kept with probability `p`; the stored distance is
/// occasionally off by one when `corrupt` is set.
pub fn random_labeling(rng: &mut impl Rng, g: &Graph, d: &DistanceMatrix, p: f64, corrupt: bool) -> Labeling {
    let mut l = Labeling::new(g.vertex_count());
    for v in g.vertices() {
        for h in g.vertices() {
            if let Some(dist) = d.get(v, h) {
                if rng.gen_bool(p) {
                    let dist = if corrupt && rng.gen_bool(0.05) { dist + 1 } else { dist };
                    l.insert(v, h, dist);
                }
            }
        }
    }
    l
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    all_pairs_distances(g)
}
