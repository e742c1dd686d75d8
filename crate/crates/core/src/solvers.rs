//! Exact solvers for minimum hub labeling and minimum vertex cover, each
//! paired with an exhaustive oracle for small graphs.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{all_pairs_distances, on_some_shortest_path, DistanceMatrix, Graph, VertexId};
use crate::labeling::{greedy_labeling, verify, Labeling};

/// Largest graph the hub-labeling oracle accepts.
pub const BRUTE_FORCE_HL_MAX_VERTICES: usize = 5;
/// Largest graph the vertex-cover oracle accepts.
pub const BRUTE_FORCE_VC_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices, the limit for this solver is {max}")]
    GraphTooLarge { n: usize, max: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("solve limits must be positive")]
    InvalidLimits,
    #[error("supplied incumbent is not a valid hub labeling of the graph")]
    InvalidIncumbent,
}

/// Search budget. Both components are positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    max_nodes: u64,
    max_time: Duration,
}

impl SolveLimits {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<SolveLimits, SolveError> {
        if max_nodes == 0 || max_time.is_zero() {
            return Err(SolveError::InvalidLimits);
        }
        Ok(SolveLimits { max_nodes, max_time })
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_time(&self) -> Duration {
        self.max_time
    }
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_nodes: 50_000_000, max_time: Duration::from_secs(60) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The search space was exhausted; no smaller solution exists.
    Optimal,
    /// Limits were hit; the solution is the best one found.
    BudgetExhausted,
    /// No solution of size at most the given bound exists.
    InfeasibleWithinBudget(usize),
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::BudgetExhausted => "budget-exhausted",
            SolveStatus::InfeasibleWithinBudget(_) => "infeasible-within-budget",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<T> {
    pub solution: Option<T>,
    pub size: Option<usize>,
    pub status: SolveStatus,
    /// Search nodes (or enumerated candidates, for the oracles) visited.
    pub nodes: u64,
}

/// Answer of [`decide_ohl`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Labeling),
    No,
    Unknown,
}

impl Decision {
    pub fn as_str(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        }
    }
}

/// A `(vertex, hub)` assignment.
type Slot = (VertexId, VertexId);

struct Budget {
    limits: SolveLimits,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Budget {
    fn new(limits: SolveLimits) -> Budget {
        Budget { limits, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one node; returns false once a limit is hit.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes
            || (self.nodes.is_multiple_of(256) && self.start.elapsed() > self.limits.max_time)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

// ---------------------------------------------------------------------------
// Hub labeling branch and bound
// ---------------------------------------------------------------------------

/// Whether hub `h` in the label of `v` can cover any pair other than
/// `{v, h}`: some `z != h` has `h` on a shortest `v`-`z` path.
fn hub_is_useful(d: &DistanceMatrix, v: VertexId, h: VertexId) -> bool {
    let n = d.vertex_count();
    (0..n).any(|z| z != h && on_some_shortest_path(d, v, z, h))
}

/// Assignments `h ∈ ℓ(v)` that some optimal labeling uses.
///
/// An assignment that only serves the pair `{v, h}` can be traded for
/// `v ∈ ℓ(h)` at equal cost. When both directions only serve that pair the
/// one with the smaller vertex first is kept.
fn allowed_assignments(d: &DistanceMatrix) -> Vec<bool> {
    let n = d.vertex_count();
    let mut useful = vec![false; n * n];
    for v in 0..n {
        for h in 0..n {
            useful[v * n + h] = v == h || hub_is_useful(d, v, h);
        }
    }
    let mut allowed = vec![false; n * n];
    for v in 0..n {
        for h in 0..n {
            allowed[v * n + h] = useful[v * n + h] || (!useful[h * n + v] && v < h);
        }
    }
    allowed
}

struct PairInfo {
    u: VertexId,
    v: VertexId,
    /// Shortest-path vertices, as a bitset.
    on_path: Vec<u64>,
    /// Hubs worth branching on, in vertex order.
    candidates: Vec<VertexId>,
}

struct HubSearch<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    words: usize,
    pairs: Vec<PairInfo>,
    labels: Vec<u64>,
    count: usize,
    best: Option<Labeling>,
    /// Solutions must have size strictly below this.
    bound: usize,
    stop_at_first: bool,
    budget: Budget,
    scratch_used: Vec<u64>,
}

impl<'a> HubSearch<'a> {
    fn new(d: &'a DistanceMatrix, limits: SolveLimits) -> HubSearch<'a> {
        let n = d.vertex_count();
        let words = n.div_ceil(64).max(1);
        let allowed = allowed_assignments(d);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if d.get(u, v).is_none() {
                    continue;
                }
                let mut on_path = vec![0u64; words];
                let mut candidates = Vec::new();
                for x in 0..n {
                    if on_some_shortest_path(d, u, v, x) {
                        on_path[x / 64] |= 1 << (x % 64);
                        if allowed[u * n + x] && allowed[v * n + x] {
                            candidates.push(x);
                        }
                    }
                }
                debug_assert!(!candidates.is_empty());
                pairs.push(PairInfo { u, v, on_path, candidates });
            }
        }
        // most constrained first
        pairs.sort_by_key(|p| (p.candidates.len(), p.u, p.v));

        let mut labels = vec![0u64; n * words];
        for v in 0..n {
            labels[v * words + v / 64] |= 1 << (v % 64);
        }
        HubSearch {
            d,
            n,
            words,
            pairs,
            labels,
            count: n,
            best: None,
            bound: usize::MAX,
            stop_at_first: false,
            budget: Budget::new(limits),
            scratch_used: vec![0u64; (n * n).div_ceil(64)],
        }
    }

    fn has(&self, v: VertexId, h: VertexId) -> bool {
        self.labels[v * self.words + h / 64] & (1 << (h % 64)) != 0
    }

    fn set(&mut self, v: VertexId, h: VertexId, on: bool) {
        let w = &mut self.labels[v * self.words + h / 64];
        if on {
            *w |= 1 << (h % 64);
        } else {
            *w &= !(1 << (h % 64));
        }
    }

    fn is_covered(&self, p: &PairInfo) -> bool {
        let (a, b) = (p.u * self.words, p.v * self.words);
        (0..self.words).any(|i| self.labels[a + i] & self.labels[b + i] & p.on_path[i] != 0)
    }

    /// Assignments hub `x` still needs to cover pair `p`.
    fn missing(&self, p: &PairInfo, x: VertexId) -> (Option<Slot>, Option<Slot>) {
        let a = (!self.has(p.u, x)).then_some((p.u, x));
        let b = (!self.has(p.v, x)).then_some((p.v, x));
        (a, b)
    }

    /// Greedy packing of uncovered pairs whose candidate assignment sets are
    /// pairwise disjoint; each packed pair adds the fewest assignments any of
    /// its candidates needs.
    fn packing_bound(&mut self, first: usize) -> usize {
        let mut used = std::mem::take(&mut self.scratch_used);
        used.iter_mut().for_each(|w| *w = 0);
        let n = self.n;
        let mut extra = 0;
        let mut needed = Vec::new();
        for idx in first..self.pairs.len() {
            let p = &self.pairs[idx];
            if self.is_covered(p) {
                continue;
            }
            needed.clear();
            let mut cheapest = usize::MAX;
            let mut clash = false;
            for &x in &p.candidates {
                let (a, b) = self.missing(p, x);
                let mut cost = 0;
                for (v, h) in a.into_iter().chain(b) {
                    let id = v * n + h;
                    if used[id / 64] & (1 << (id % 64)) != 0 {
                        clash = true;
                        break;
                    }
                    needed.push(id);
                    cost += 1;
                }
                if clash {
                    break;
                }
                cheapest = cheapest.min(cost);
            }
            if clash {
                continue;
            }
            for &id in &needed {
                used[id / 64] |= 1 << (id % 64);
            }
            extra += cheapest;
        }
        self.scratch_used = used;
        extra
    }

    fn snapshot(&self) -> Labeling {
        let mut l = Labeling::new(self.n);
        for v in 0..self.n {
            for h in 0..self.n {
                if self.has(v, h) {
                    l.assign(self.d, v, h);
                }
            }
        }
        l
    }

    /// Returns false when the search should stop.
    fn dfs(&mut self, start: usize) -> bool {
        if !self.budget.tick() {
            return false;
        }
        let Some(idx) = (start..self.pairs.len()).find(|&i| !self.is_covered(&self.pairs[i])) else {
            if self.count < self.bound {
                self.bound = self.count;
                self.best = Some(self.snapshot());
                return !self.stop_at_first;
            }
            return true;
        };
        if self.count + self.packing_bound(idx) >= self.bound {
            return true;
        }
        let candidates = self.pairs[idx].candidates.clone();
        for x in candidates {
            let (a, b) = self.missing(&self.pairs[idx], x);
            let added: Vec<(VertexId, VertexId)> = a.into_iter().chain(b).collect();
            if self.count + added.len() >= self.bound {
                continue;
            }
            for &(v, h) in &added {
                self.set(v, h, true);
            }
            self.count += added.len();
            let go_on = self.dfs(idx + 1);
            for &(v, h) in &added {
                self.set(v, h, false);
            }
            self.count -= added.len();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Branch and bound over vertex pairs.
///
/// Pairs are processed most-constrained first; the first uncovered pair is
/// branched on each hub on one of its shortest paths, in vertex order. The
/// bound adds a disjoint-pairs packing to the current assignment count. The
/// incumbent defaults to [`greedy_labeling`].
pub fn exact_minimum_hub_labeling(
    g: &Graph,
    incumbent: Option<&Labeling>,
    limits: SolveLimits,
) -> Result<SolveResult<Labeling>, SolveError> {
    if g.is_empty() {
        return Err(SolveError::EmptyGraph);
    }
    let d = all_pairs_distances(g);
    let start = match incumbent {
        Some(l) => {
            let ok = verify(g, &d, l).map(|r| r.valid).unwrap_or(false);
            if !ok {
                return Err(SolveError::InvalidIncumbent);
            }
            l.clone()
        }
        None => greedy_labeling(g, &d),
    };

    let mut search = HubSearch::new(&d, limits);
    search.bound = start.size();
    let completed = search.dfs(0);
    let nodes = search.budget.nodes;
    let best = search.best.take().unwrap_or(start);
    Ok(SolveResult {
        size: Some(best.size()),
        solution: Some(best),
        status: if completed { SolveStatus::Optimal } else { SolveStatus::BudgetExhausted },
        nodes,
    })
}

/// Is there a hub labeling of size at most `k`?
///
/// `Yes` carries a witness; `No` means the search exhausted the space below
/// `k + 1`; `Unknown` means the limits were hit first.
pub fn decide_ohl(g: &Graph, k: usize, limits: SolveLimits) -> Decision {
    if g.is_empty() {
        return Decision::Yes(Labeling::new(0));
    }
    let d = all_pairs_distances(g);
    let greedy = greedy_labeling(g, &d);
    if greedy.size() <= k {
        return Decision::Yes(greedy);
    }
    let mut search = HubSearch::new(&d, limits);
    search.bound = k.saturating_add(1);
    search.stop_at_first = true;
    let completed = search.dfs(0);
    match search.best.take() {
        Some(l) => Decision::Yes(l),
        None if completed => Decision::No,
        None => Decision::Unknown,
    }
}

/// Exhaustive oracle: iterative deepening over the labeling size, trying every
/// set of non-reflexive assignments of each size.
pub fn brute_force_minimum_hub_labeling(g: &Graph, limits: SolveLimits) -> Result<SolveResult<Labeling>, SolveError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_HL_MAX_VERTICES {
        return Err(SolveError::GraphTooLarge { n, max: BRUTE_FORCE_HL_MAX_VERTICES });
    }
    let d = all_pairs_distances(g);
    let slots: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|v| (0..n).map(move |h| (v, h)))
        .filter(|&(v, h)| v != h && d.get(v, h).is_some())
        .collect();
    let pairs: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).filter(|&(u, v)| d.get(u, v).is_some()).collect();

    let valid = |labels: &[u32]| {
        pairs.iter().all(|&(u, v)| {
            let common = labels[u] & labels[v];
            (0..n).any(|x| common & (1 << x) != 0 && on_some_shortest_path(&d, u, v, x))
        })
    };

    let mut budget = Budget::new(limits);
    let m = slots.len();
    for extra in 0..=m {
        let mut chosen: Vec<usize> = (0..extra).collect();
        loop {
            if !budget.tick() {
                return Ok(SolveResult { solution: None, size: None, status: SolveStatus::BudgetExhausted, nodes: budget.nodes });
            }
            let mut labels: Vec<u32> = (0..n).map(|v| 1 << v).collect();
            for &s in &chosen {
                let (v, h) = slots[s];
                labels[v] |= 1 << h;
            }
            if valid(&labels) {
                let mut l = Labeling::reflexive(n);
                for &s in &chosen {
                    let (v, h) = slots[s];
                    l.assign(&d, v, h);
                }
                return Ok(SolveResult {
                    size: Some(n + extra),
                    solution: Some(l),
                    status: SolveStatus::Optimal,
                    nodes: budget.nodes,
                });
            }
            if !next_combination(&mut chosen, m) {
                break;
            }
        }
    }
    unreachable!("assigning every reachable hub is always a valid labeling")
}

/// Advances `c` to the next `c.len()`-subset of `0..m` in lexicographic order.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < m - k + i {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Vertex cover
// ---------------------------------------------------------------------------

pub fn is_vertex_cover(g: &Graph, cover: &BTreeSet<VertexId>) -> bool {
    g.edges().all(|(u, v)| cover.contains(&u) || cover.contains(&v))
}

struct CoverSearch {
    edges: Vec<(VertexId, VertexId)>,
    taken: Vec<bool>,
    count: usize,
    best: Vec<bool>,
    best_count: usize,
    budget: Budget,
}

impl CoverSearch {
    /// Size of a greedy maximal matching among uncovered edges.
    fn matching_bound(&self) -> usize {
        let mut matched = vec![false; self.taken.len()];
        let mut size = 0;
        for &(u, v) in &self.edges {
            if !self.taken[u] && !self.taken[v] && !matched[u] && !matched[v] {
                matched[u] = true;
                matched[v] = true;
                size += 1;
            }
        }
        size
    }

    fn dfs(&mut self) -> bool {
        if !self.budget.tick() {
            return false;
        }
        let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| !self.taken[u] && !self.taken[v]) else {
            if self.count < self.best_count {
                self.best_count = self.count;
                self.best = self.taken.clone();
            }
            return true;
        };
        if self.count + self.matching_bound() >= self.best_count {
            return true;
        }
        for x in [u, v] {
            self.taken[x] = true;
            self.count += 1;
            let go_on = self.dfs();
            self.taken[x] = false;
            self.count -= 1;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Branch on the first uncovered edge `uv` (`u < v`): take `u`, then take `v`.
pub fn exact_minimum_vertex_cover(g: &Graph, limits: SolveLimits) -> SolveResult<BTreeSet<VertexId>> {
    let n = g.vertex_count();
    let mut search = CoverSearch {
        edges: g.edges().collect(),
        taken: vec![false; n],
        count: 0,
        best: vec![true; n],
        best_count: n + 1,
        budget: Budget::new(limits),
    };
    let completed = search.dfs();
    // the all-vertices cover is the fallback when the budget runs out first
    let best_count = search.best_count.min(n);
    let cover: BTreeSet<VertexId> = (0..n).filter(|&v| search.best[v]).collect();
    debug_assert_eq!(cover.len(), best_count);
    SolveResult {
        size: Some(cover.len()),
        solution: Some(cover),
        status: if completed { SolveStatus::Optimal } else { SolveStatus::BudgetExhausted },
        nodes: search.budget.nodes,
    }
}

/// Exhaustive subset enumeration by increasing size.
pub fn brute_force_minimum_vertex_cover(g: &Graph) -> Result<SolveResult<BTreeSet<VertexId>>, SolveError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_VC_MAX_VERTICES {
        return Err(SolveError::GraphTooLarge { n, max: BRUTE_FORCE_VC_MAX_VERTICES });
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let mut nodes = 0;
    for size in 0..=n {
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            let mask: u32 = chosen.iter().fold(0, |m, &v| m | (1 << v));
            if edges.iter().all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0) {
                return Ok(SolveResult {
                    size: Some(size),
                    solution: Some(chosen.into_iter().collect()),
                    status: SolveStatus::Optimal,
                    nodes,
                });
            }
            if !next_combination(&mut chosen, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// All minimum vertex covers, by subset enumeration.
pub fn all_minimum_vertex_covers(g: &Graph) -> Result<Vec<BTreeSet<VertexId>>, SolveError> {
    let n = g.vertex_count();
    let size = brute_force_minimum_vertex_cover(g)?.size.unwrap_or(0);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = (0..size).collect();
    loop {
        let set: BTreeSet<VertexId> = chosen.iter().copied().collect();
        if is_vertex_cover(g, &set) {
            out.push(set);
        }
        if !next_combination(&mut chosen, n) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(names: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::build(names, edges).unwrap()
    }

    fn limits() -> SolveLimits {
        SolveLimits::new(10_000_000, Duration::from_secs(60)).unwrap()
    }

    #[test]
    fn limits_must_be_positive() {
        assert_eq!(SolveLimits::new(0, Duration::from_secs(1)), Err(SolveError::InvalidLimits));
        assert_eq!(SolveLimits::new(1, Duration::ZERO), Err(SolveError::InvalidLimits));
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn exact_small_values() {
        let k1 = graph(&["a"], &[]);
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        let p3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let k3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let star = graph(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d")]);
        for (g, want) in [(&k1, 1), (&k2, 3), (&p3, 5), (&k3, 6), (&star, 7)] {
            let r = exact_minimum_hub_labeling(g, None, limits()).unwrap();
            assert_eq!(r.status, SolveStatus::Optimal);
            assert_eq!(r.size, Some(want), "{g:?}");
            let d = all_pairs_distances(g);
            assert!(verify(g, &d, r.solution.as_ref().unwrap()).unwrap().valid);
        }
    }

    #[test]
    fn oracle_small_values() {
        let k1 = graph(&["a"], &[]);
        let p3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let split = graph(&["a", "b"], &[]);
        assert_eq!(brute_force_minimum_hub_labeling(&k1, limits()).unwrap().size, Some(1));
        assert_eq!(brute_force_minimum_hub_labeling(&p3, limits()).unwrap().size, Some(5));
        assert_eq!(brute_force_minimum_hub_labeling(&split, limits()).unwrap().size, Some(2));

        let big = graph(&["a", "b", "c", "d", "e", "f"], &[]);
        assert_eq!(
            brute_force_minimum_hub_labeling(&big, limits()),
            Err(SolveError::GraphTooLarge { n: 6, max: 5 })
        );
    }

    #[test]
    fn empty_graph_is_rejected() {
        let empty = graph(&[], &[]);
        assert_eq!(exact_minimum_hub_labeling(&empty, None, limits()), Err(SolveError::EmptyGraph));
    }

    #[test]
    fn decisions() {
        let k1 = graph(&["a"], &[]);
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        assert!(matches!(decide_ohl(&k2, 3, limits()), Decision::Yes(ref l) if l.size() <= 3));
        assert_eq!(decide_ohl(&k2, 2, limits()), Decision::No);
        assert_eq!(decide_ohl(&k1, 0, limits()), Decision::No);
    }

    #[test]
    fn budget_exhaustion_keeps_incumbent() {
        let g = graph(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a")],
        );
        let tiny = SolveLimits::new(1, Duration::from_secs(10)).unwrap();
        let r = exact_minimum_hub_labeling(&g, None, tiny).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
        let d = all_pairs_distances(&g);
        assert!(verify(&g, &d, r.solution.as_ref().unwrap()).unwrap().valid);
    }

    #[test]
    fn vertex_cover_values() {
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        let k3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let fig = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")]);
        let p3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let edgeless = graph(&["a", "b"], &[]);
        assert_eq!(exact_minimum_vertex_cover(&k2, limits()).size, Some(1));
        assert_eq!(exact_minimum_vertex_cover(&k3, limits()).size, Some(2));
        let r = exact_minimum_vertex_cover(&fig, limits());
        assert_eq!(r.size, Some(2));
        assert!(is_vertex_cover(&fig, r.solution.as_ref().unwrap()));
        assert_eq!(exact_minimum_vertex_cover(&edgeless, limits()).size, Some(0));

        assert_eq!(brute_force_minimum_vertex_cover(&edgeless).unwrap().size, Some(0));
        assert_eq!(brute_force_minimum_vertex_cover(&k2).unwrap().size, Some(1));
        let r = brute_force_minimum_vertex_cover(&p3).unwrap();
        assert_eq!(r.solution, Some(BTreeSet::from([1])));
        assert_eq!(all_minimum_vertex_covers(&k2).unwrap().len(), 2);
    }
}
