//! Undirected simple graphs, all-pairs hop distances and shortest-path
//! membership.
//!
//! Vertices are addressed by [`VertexId`], the position of the vertex name in
//! the graph's lexicographically sorted name list. Comparing ids therefore
//! compares names, and every deterministic tie-break in the crate relies on
//! that order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Index of a vertex in [`Graph::names`]; ordered like the vertex names.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
}

/// An undirected simple graph with named vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from declared vertex names and name pairs.
    pub fn build<S, T>(vertex_names: &[S], edges: &[(T, T)]) -> Result<Graph, GraphError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut names: Vec<String> = vertex_names.iter().map(|s| s.as_ref().to_owned()).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, VertexId> =
            names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

        let mut adj = vec![Vec::new(); names.len()];
        let mut seen = HashSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index.get(a).ok_or_else(|| GraphError::UnknownEndpoint(a.to_owned()))?;
            let v = *index.get(b).ok_or_else(|| GraphError::UnknownEndpoint(b.to_owned()))?;
            if u == v {
                return Err(GraphError::SelfLoop(a.to_owned()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(a.to_owned(), b.to_owned()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { names, index, adj, edge_count: seen.len() })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in vertex order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    /// Sorted open neighborhood.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.names.is_empty() {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != INFINITE)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self.edges().map(|(u, v)| (self.name(u), self.name(v))).collect();
        f.debug_struct("Graph").field("vertices", &self.names).field("edges", &edges).finish()
    }
}

const INFINITE: u32 = u32::MAX;

fn bfs(g: &Graph, source: VertexId) -> Vec<u32> {
    let mut dist = vec![INFINITE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == INFINITE {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop distances from `source`; `None` for unreachable vertices.
pub fn single_source_distances(g: &Graph, source: VertexId) -> Vec<Option<u32>> {
    bfs(g, source).into_iter().map(|d| (d != INFINITE).then_some(d)).collect()
}

/// All-pairs hop distances. `None` stands for infinity.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<u32> {
        match self.dist[u * self.n + v] {
            INFINITE => None,
            d => Some(d),
        }
    }

    /// Largest finite distance, `None` for the empty graph.
    pub fn max_finite(&self) -> Option<u32> {
        self.dist.iter().copied().filter(|&d| d != INFINITE).max()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Option<u32>>> =
            (0..self.n).map(|u| (0..self.n).map(|v| self.get(u, v)).collect()).collect();
        f.debug_struct("DistanceMatrix").field("dist", &rows).finish()
    }
}

/// One breadth-first search per vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in g.vertices() {
        dist.extend(bfs(g, s));
    }
    DistanceMatrix { n, dist }
}

/// True iff `x` lies on at least one shortest `u`-`v` path, i.e.
/// `d(u,x) + d(x,v) = d(u,v)` with all three finite.
pub fn on_some_shortest_path(d: &DistanceMatrix, u: VertexId, v: VertexId, x: VertexId) -> bool {
    match (d.get(u, v), d.get(u, x), d.get(x, v)) {
        (Some(uv), Some(ux), Some(xv)) => ux + xv == uv,
        _ => false,
    }
}

/// `N[u] ⊊ N[v]` for closed neighborhoods.
pub fn closed_neighborhood_proper_subset(g: &Graph, u: VertexId, v: VertexId) -> bool {
    if u == v || !g.has_edge(u, v) {
        // u ∈ N[u] ⊆ N[v] needs adjacency
        return false;
    }
    g.degree(u) < g.degree(v) && g.neighbors(u).iter().all(|&x| x == v || g.has_edge(x, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    #[test]
    fn build_k1_and_p3() {
        let k1 = Graph::build::<_, &str>(&["a"], &[]).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);

        let p3 = path3();
        assert_eq!(p3.names(), ["a", "b", "c"]);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(&["a", "b"], &[("a", "b"), ("a", "b")]),
            Err(GraphError::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            Graph::build(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge("b".into(), "a".into()))
        );
        assert_eq!(
            Graph::build::<_, &str>(&["a", "a"], &[]),
            Err(GraphError::DuplicateVertex("a".into()))
        );
        assert_eq!(Graph::build(&["a"], &[("a", "z")]), Err(GraphError::UnknownEndpoint("z".into())));
        assert_eq!(Graph::build(&["a"], &[("a", "a")]), Err(GraphError::SelfLoop("a".into())));
    }

    #[test]
    fn vertex_order_is_lexicographic() {
        let g = Graph::build::<_, &str>(&["w.2", "w.10", "a"], &[]).unwrap();
        assert_eq!(g.names(), ["a", "w.10", "w.2"]);
        assert_eq!(g.vertex("w.2"), Some(2));
    }

    #[test]
    fn distances() {
        let d = all_pairs_distances(&path3());
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(1, 1), Some(0));

        let k1 = Graph::build::<_, &str>(&["a"], &[]).unwrap();
        assert_eq!(all_pairs_distances(&k1).get(0, 0), Some(0));

        let split = Graph::build::<_, &str>(&["a", "b"], &[]).unwrap();
        assert_eq!(all_pairs_distances(&split).get(0, 1), None);
        assert!(!split.is_connected());
    }

    #[test]
    fn shortest_path_membership() {
        let d = all_pairs_distances(&path3());
        assert!(on_some_shortest_path(&d, 0, 2, 1));
        assert!(!on_some_shortest_path(&d, 0, 1, 2));
        assert!(on_some_shortest_path(&d, 0, 0, 0));

        let d = all_pairs_distances(&triangle());
        assert!(!on_some_shortest_path(&d, 0, 1, 2));

        let split = Graph::build::<_, &str>(&["a", "b"], &[]).unwrap();
        let d = all_pairs_distances(&split);
        assert!(!on_some_shortest_path(&d, 0, 1, 0));
    }

    #[test]
    fn neighborhood_containment() {
        let k2 = Graph::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(!closed_neighborhood_proper_subset(&k2, 0, 1));
        let p3 = path3();
        assert!(closed_neighborhood_proper_subset(&p3, 0, 1));
        assert!(!closed_neighborhood_proper_subset(&p3, 1, 0));
        assert!(!closed_neighborhood_proper_subset(&p3, 0, 2));
        assert_eq!(p3.closed_neighborhood(1), vec![0, 1, 2]);
    }
}
