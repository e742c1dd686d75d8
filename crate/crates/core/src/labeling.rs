//! Hub labelings: the data model, the coverage verifier, label-based distance
//! queries and a greedy baseline constructor.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{on_some_shortest_path, DistanceMatrix, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling covers {labeling} vertices but the graph has {graph}")]
    VertexCountMismatch { labeling: usize, graph: usize },
    #[error("hub {hub} in the label of vertex {vertex} is not a vertex of the graph")]
    UnknownHub { vertex: VertexId, hub: VertexId },
}

/// Per-vertex hub sets; each hub carries the distance stored with it.
///
/// The size of a labeling counts `(vertex, hub)` assignments; stored
/// distances do not contribute.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<BTreeMap<VertexId, u32>>,
}

impl Labeling {
    /// Empty labels for `n` vertices.
    pub fn new(n: usize) -> Labeling {
        Labeling { labels: vec![BTreeMap::new(); n] }
    }

    /// Every vertex is its own hub at distance zero.
    pub fn reflexive(n: usize) -> Labeling {
        let mut l = Labeling::new(n);
        for v in 0..n {
            l.insert(v, v, 0);
        }
        l
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Returns the previously stored distance, if the hub was already present.
    pub fn insert(&mut self, v: VertexId, hub: VertexId, dist: u32) -> Option<u32> {
        self.labels[v].insert(hub, dist)
    }

    /// Inserts `hub` into the label of `v` with the distance taken from `d`.
    /// Returns true if the assignment is new.
    ///
    /// Panics if `hub` is unreachable from `v`.
    pub fn assign(&mut self, d: &DistanceMatrix, v: VertexId, hub: VertexId) -> bool {
        let dist = d.get(v, hub).expect("hub must be reachable from its vertex");
        self.labels[v].insert(hub, dist).is_none()
    }

    pub fn remove(&mut self, v: VertexId, hub: VertexId) -> Option<u32> {
        self.labels[v].remove(&hub)
    }

    pub fn contains(&self, v: VertexId, hub: VertexId) -> bool {
        self.labels[v].contains_key(&hub)
    }

    pub fn stored_distance(&self, v: VertexId, hub: VertexId) -> Option<u32> {
        self.labels[v].get(&hub).copied()
    }

    /// Hubs of `v` in vertex order with their stored distances.
    pub fn hubs(&self, v: VertexId) -> &BTreeMap<VertexId, u32> {
        &self.labels[v]
    }

    pub fn clear_label(&mut self, v: VertexId) {
        self.labels[v].clear();
    }

    /// Total number of `(vertex, hub)` assignments.
    pub fn size(&self) -> usize {
        self.labels.iter().map(BTreeMap::len).sum()
    }

    /// All `(vertex, hub, stored distance)` triples in vertex order.
    pub fn assignments(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .flat_map(|(v, hubs)| hubs.iter().map(move |(&h, &d)| (v, h, d)))
    }

    /// Hubs common to `u` and `v`, in vertex order.
    pub fn common_hubs(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let (small, large) = if self.labels[u].len() <= self.labels[v].len() {
            (&self.labels[u], &self.labels[v])
        } else {
            (&self.labels[v], &self.labels[u])
        };
        small.keys().copied().filter(move |h| large.contains_key(h))
    }

    /// Checks that every hub is a vertex of a graph with `n` vertices.
    pub fn check_domain(&self, n: usize) -> Result<(), LabelingError> {
        if self.labels.len() != n {
            return Err(LabelingError::VertexCountMismatch { labeling: self.labels.len(), graph: n });
        }
        match self.assignments().find(|&(_, h, _)| h >= n) {
            Some((vertex, hub, _)) => Err(LabelingError::UnknownHub { vertex, hub }),
            None => Ok(()),
        }
    }
}

/// A stored distance that disagrees with the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceMismatch {
    pub vertex: VertexId,
    pub hub: VertexId,
    pub stored: u32,
    pub actual: Option<u32>,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    /// Pairs `(u, v)` with `u <= v` and finite distance that share no hub on a
    /// shortest `u`-`v` path, sorted.
    pub uncovered: Vec<(VertexId, VertexId)>,
    /// Assignments whose stored distance is wrong, sorted.
    pub distance_mismatches: Vec<DistanceMismatch>,
    /// Both lists are empty.
    pub valid: bool,
}

/// Checks the hub-labeling condition for every pair at finite distance,
/// including `u = v`. Pairs in different components need no cover.
pub fn verify(g: &Graph, d: &DistanceMatrix, l: &Labeling) -> Result<CoverageReport, LabelingError> {
    let n = g.vertex_count();
    l.check_domain(n)?;

    let mut uncovered = Vec::new();
    for u in 0..n {
        for v in u..n {
            if d.get(u, v).is_none() {
                continue;
            }
            if !l.common_hubs(u, v).any(|x| on_some_shortest_path(d, u, v, x)) {
                uncovered.push((u, v));
            }
        }
    }
    let distance_mismatches: Vec<DistanceMismatch> = l
        .assignments()
        .filter_map(|(vertex, hub, stored)| {
            let actual = d.get(vertex, hub);
            (actual != Some(stored)).then_some(DistanceMismatch { vertex, hub, stored, actual })
        })
        .collect();

    let valid = uncovered.is_empty() && distance_mismatches.is_empty();
    Ok(CoverageReport { uncovered, distance_mismatches, valid })
}

/// Minimum over common hubs `x` of the stored `d(u,x) + d(v,x)`; `None` when
/// the labels are disjoint.
pub fn query_distance(l: &Labeling, u: VertexId, v: VertexId) -> Option<u32> {
    l.common_hubs(u, v)
        .map(|x| l.hubs(u)[&x] + l.hubs(v)[&x])
        .min()
}

pub fn check_distance_consistency(l: &Labeling, d: &DistanceMatrix) -> bool {
    l.assignments().all(|(v, h, stored)| d.get(v, h) == Some(stored))
}

/// Greedy baseline.
///
/// Repeatedly picks the hub lying on the shortest paths of the most
/// still-uncovered pairs (lowest vertex first on ties) and adds it to the
/// labels of both endpoints of each of those pairs.
pub fn greedy_labeling(g: &Graph, d: &DistanceMatrix) -> Labeling {
    let n = g.vertex_count();
    let mut pairs = Vec::new();
    let mut pairs_through: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in u..n {
            if d.get(u, v).is_none() {
                continue;
            }
            let id = pairs.len();
            pairs.push((u, v));
            for (x, through) in pairs_through.iter_mut().enumerate() {
                if on_some_shortest_path(d, u, v, x) {
                    through.push(id);
                }
            }
        }
    }
    let mut gain: Vec<usize> = pairs_through.iter().map(Vec::len).collect();
    let mut covered = vec![false; pairs.len()];
    let mut on_path: Vec<Vec<VertexId>> = vec![Vec::new(); pairs.len()];
    for (x, ids) in pairs_through.iter().enumerate() {
        for &id in ids {
            on_path[id].push(x);
        }
    }

    let mut l = Labeling::new(n);
    // max_by_key returns the last maximum; scan in reverse for lowest id
    while let Some(hub) = (0..n).rev().filter(|&x| gain[x] > 0).max_by_key(|&x| gain[x]) {
        for &id in &pairs_through[hub] {
            if covered[id] {
                continue;
            }
            covered[id] = true;
            let (u, v) = pairs[id];
            l.assign(d, u, hub);
            l.assign(d, v, hub);
            for &x in &on_path[id] {
                gain[x] -= 1;
            }
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;

    fn k2() -> Graph {
        Graph::build(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn p3() -> Graph {
        Graph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn from_triples(n: usize, triples: &[(usize, usize, u32)]) -> Labeling {
        let mut l = Labeling::new(n);
        for &(v, h, dist) in triples {
            l.insert(v, h, dist);
        }
        l
    }

    #[test]
    fn size_counts_assignments() {
        assert_eq!(Labeling::new(0).size(), 0);
        let l = from_triples(2, &[(0, 0, 0), (1, 1, 0), (0, 1, 1)]);
        assert_eq!(l.size(), 3);
        let mut dup = l.clone();
        assert_eq!(dup.insert(0, 1, 1), Some(1));
        assert_eq!(dup.size(), 3);
    }

    #[test]
    fn verify_k2() {
        let g = k2();
        let d = all_pairs_distances(&g);
        let refl = Labeling::reflexive(2);
        let report = verify(&g, &d, &refl).unwrap();
        assert_eq!(report.uncovered, vec![(0, 1)]);
        assert!(!report.valid);

        let ok = from_triples(2, &[(0, 0, 0), (1, 1, 0), (1, 0, 1)]);
        assert!(verify(&g, &d, &ok).unwrap().valid);
    }

    #[test]
    fn verify_p3_center_hub() {
        let g = p3();
        let d = all_pairs_distances(&g);
        let l = from_triples(3, &[(0, 0, 0), (1, 1, 0), (2, 2, 0), (0, 1, 1), (2, 1, 1)]);
        let report = verify(&g, &d, &l).unwrap();
        assert!(report.valid, "{report:?}");
        assert_eq!(query_distance(&l, 0, 2), Some(2));
        assert_eq!(query_distance(&l, 1, 1), Some(0));
    }

    #[test]
    fn verify_flags_wrong_distance() {
        let g = k2();
        let d = all_pairs_distances(&g);
        let l = from_triples(2, &[(0, 0, 0), (1, 1, 0), (0, 1, 2)]);
        let report = verify(&g, &d, &l).unwrap();
        assert!(report.uncovered.is_empty());
        assert_eq!(report.distance_mismatches.len(), 1);
        assert!(!report.valid);
        assert!(!check_distance_consistency(&l, &d));
        assert!(check_distance_consistency(&Labeling::reflexive(2), &d));
    }

    #[test]
    fn verify_rejects_foreign_hub() {
        let g = k2();
        let d = all_pairs_distances(&g);
        let l = from_triples(2, &[(0, 5, 1)]);
        assert_eq!(verify(&g, &d, &l), Err(LabelingError::UnknownHub { vertex: 0, hub: 5 }));
        assert!(matches!(
            verify(&g, &d, &Labeling::new(3)),
            Err(LabelingError::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn disconnected_pairs_are_vacuous() {
        let g = Graph::build::<_, &str>(&["a", "b"], &[]).unwrap();
        let d = all_pairs_distances(&g);
        let l = Labeling::reflexive(2);
        assert!(verify(&g, &d, &l).unwrap().valid);
        assert_eq!(query_distance(&l, 0, 1), None);
    }

    #[test]
    fn greedy_small_graphs() {
        let k1 = Graph::build::<_, &str>(&["a"], &[]).unwrap();
        assert_eq!(greedy_labeling(&k1, &all_pairs_distances(&k1)).size(), 1);

        // hub b first: (a,b) (b,b) (b,c) (a,c); then a and c reflexively
        let g = p3();
        let d = all_pairs_distances(&g);
        let l = greedy_labeling(&g, &d);
        assert_eq!(l.size(), 5);
        assert!(l.contains(0, 1) && l.contains(2, 1) && l.contains(1, 1));
        assert!(verify(&g, &d, &l).unwrap().valid);
    }
}
