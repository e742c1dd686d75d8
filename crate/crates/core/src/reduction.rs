//! The polynomial-time reduction from Vertex Cover to Optimal Hub Labeling.
//!
//! For a vertex-cover instance `(G', k')` the construction sets
//! `γ = 8|V'| + 3|E'| + k' + 2` and builds `G` from
//!
//! * a hub vertex `w` (named `w`),
//! * `γ` padding vertices `w.1 … w.γ`, each adjacent only to `w`,
//! * a path `v.1 – v.2 – v.3` for every original vertex `v`, with `v.1`
//!   adjacent to `w`,
//! * an edge `u.1 – v.1` for every original edge `uv`.
//!
//! The hub-labeling budget is `k = 3γ − 1`. A cover `X` of size `k'` maps to a
//! labeling of size `k` ([`vc_to_labeling`]); a normalized labeling of size at
//! most `k` maps back to a cover of size at most `k'` ([`labeling_to_vc`]).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    all_pairs_distances, closed_neighborhood_proper_subset, single_source_distances, Graph, GraphError, VertexId,
};
use crate::labeling::{verify, Labeling, LabelingError};
use crate::solvers::{decide_ohl, exact_minimum_vertex_cover, is_vertex_cover, Decision, SolveLimits, SolveStatus};

/// Name of the universal hub vertex.
pub const HUB_NAME: &str = "w";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex name `{0}` is reserved by the construction (dotted names and `w` are not allowed)")]
    ReservedName(String),
    #[error("instance too large: {0} overflows")]
    Overflow(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("unknown original vertex {0}")]
    UnknownVertex(VertexId),
    #[error("`{0}`-`{1}` is not an original edge")]
    UnknownEdge(String, String),
    #[error("the vertex set leaves edge `{0}`-`{1}` uncovered")]
    NotACover(String, String),
    #[error("tie-break for edge `{0}`-`{1}` is missing or not an endpoint in the cover")]
    InconsistentTieBreak(String, String),
    #[error("graph does not match the gadget map")]
    GadgetMismatch,
}

/// `(G', k')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub graph: Graph,
    pub budget: usize,
}

/// `(G, k)` with `k = 3γ − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OhlInstance {
    pub graph: Graph,
    pub budget: usize,
}

/// Bookkeeping of the construction. Gadget vertices are ids of the
/// constructed graph; original vertices are ids of `G'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    gamma: usize,
    k_prime: usize,
    original: Graph,
    constructed: Graph,
    hub: VertexId,
    padding: Vec<VertexId>,
    triples: Vec<[VertexId; 3]>,
}

impl GadgetMap {
    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn k_prime(&self) -> usize {
        self.k_prime
    }

    /// `k = 3γ − 1`.
    pub fn budget(&self) -> usize {
        3 * self.gamma - 1
    }

    /// `G'`.
    pub fn original(&self) -> &Graph {
        &self.original
    }

    /// `G`.
    pub fn constructed(&self) -> &Graph {
        &self.constructed
    }

    pub fn hub(&self) -> VertexId {
        self.hub
    }

    /// `W`, in the order `w.1, w.2, …`.
    pub fn padding(&self) -> &[VertexId] {
        &self.padding
    }

    pub fn is_padding(&self, v: VertexId) -> bool {
        self.padding.contains(&v)
    }

    /// `[v.1, v.2, v.3]` for original vertex `v`.
    pub fn triple(&self, v: VertexId) -> Result<[VertexId; 3], ReductionError> {
        self.triples.get(v).copied().ok_or(ReductionError::UnknownVertex(v))
    }

    /// Original edges `(u, v)` with `u < v`.
    pub fn original_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.original.edges().collect()
    }

    fn edge_name(&self, u: VertexId, v: VertexId) -> (String, String) {
        (self.original.name(u).to_owned(), self.original.name(v).to_owned())
    }

    fn check_edge(&self, u: VertexId, v: VertexId) -> Result<(VertexId, VertexId), ReductionError> {
        let n = self.original.vertex_count();
        if u >= n || v >= n || !self.original.has_edge(u, v) {
            let name = |x: VertexId| self.original.names().get(x).cloned().unwrap_or_else(|| x.to_string());
            return Err(ReductionError::UnknownEdge(name(u), name(v)));
        }
        Ok((u.min(v), u.max(v)))
    }
}

/// Name of gadget vertex `v.i` (`i` in 1..=3).
pub fn gadget_name(original: &str, i: usize) -> String {
    format!("{original}.{i}")
}

/// Name of padding vertex `w.i` (`i` in 1..=γ).
pub fn padding_name(i: usize) -> String {
    format!("{HUB_NAME}.{i}")
}

fn is_reserved(name: &str) -> bool {
    name == HUB_NAME || name.contains('.')
}

/// Builds `(G, k)` and the gadget map from `(G', k')`.
pub fn build_ohl_instance(vc: &VcInstance) -> Result<(OhlInstance, GadgetMap), ReductionError> {
    let g0 = &vc.graph;
    if let Some(bad) = g0.names().iter().find(|s| is_reserved(s)) {
        return Err(ReductionError::ReservedName(bad.clone()));
    }
    let n0 = g0.vertex_count();
    let m0 = g0.edge_count();
    let gamma = 8usize
        .checked_mul(n0)
        .and_then(|a| 3usize.checked_mul(m0).and_then(|b| a.checked_add(b)))
        .and_then(|s| s.checked_add(vc.budget))
        .and_then(|s| s.checked_add(2))
        .ok_or(ReductionError::Overflow("gamma"))?;
    let budget = gamma
        .checked_mul(3)
        .map(|b| b - 1)
        .ok_or(ReductionError::Overflow("k"))?;
    3usize
        .checked_mul(n0)
        .and_then(|t| t.checked_add(gamma))
        .and_then(|t| t.checked_add(1))
        .ok_or(ReductionError::Overflow("vertex count"))?;

    let mut names = vec![HUB_NAME.to_owned()];
    let mut edges = Vec::new();
    for i in 1..=gamma {
        let x = padding_name(i);
        edges.push((HUB_NAME.to_owned(), x.clone()));
        names.push(x);
    }
    for v in g0.names() {
        let [v1, v2, v3] = [1, 2, 3].map(|i| gadget_name(v, i));
        edges.push((HUB_NAME.to_owned(), v1.clone()));
        edges.push((v1.clone(), v2.clone()));
        edges.push((v2.clone(), v3.clone()));
        names.extend([v1, v2, v3]);
    }
    for (u, v) in g0.edges() {
        edges.push((gadget_name(g0.name(u), 1), gadget_name(g0.name(v), 1)));
    }
    let g = Graph::build(&names, &edges)?;

    let id = |name: &str| g.vertex(name).expect("constructed vertex");
    let gm = GadgetMap {
        gamma,
        k_prime: vc.budget,
        hub: id(HUB_NAME),
        padding: (1..=gamma).map(|i| id(&padding_name(i))).collect(),
        triples: g0.names().iter().map(|v| [1, 2, 3].map(|i| id(&gadget_name(v, i)))).collect(),
        original: g0.clone(),
        constructed: g.clone(),
    };
    Ok((OhlInstance { graph: g, budget }, gm))
}

/// `ℓ_v`: the non-reflexive assignments inside the gadget of `v`, as
/// `(vertex, hub)` pairs.
pub fn vertex_restriction(
    l: &Labeling,
    gm: &GadgetMap,
    v: VertexId,
) -> Result<BTreeSet<(VertexId, VertexId)>, ReductionError> {
    let t = gm.triple(v)?;
    let mut out = BTreeSet::new();
    for &a in &t {
        for &b in &t {
            if a != b && l.contains(a, b) {
                out.insert((a, b));
            }
        }
    }
    Ok(out)
}

/// `ℓ_uv`: all assignments between the gadgets of `u` and `v`.
pub fn edge_restriction(
    l: &Labeling,
    gm: &GadgetMap,
    u: VertexId,
    v: VertexId,
) -> Result<BTreeSet<(VertexId, VertexId)>, ReductionError> {
    let (u, v) = gm.check_edge(u, v)?;
    let (tu, tv) = (gm.triple(u)?, gm.triple(v)?);
    let mut out = BTreeSet::new();
    for &a in &tu {
        for &b in &tv {
            if l.contains(a, b) {
                out.insert((a, b));
            }
            if l.contains(b, a) {
                out.insert((b, a));
            }
        }
    }
    Ok(out)
}

/// A choice of endpoint for every original edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieBreak {
    choice: BTreeMap<(VertexId, VertexId), VertexId>,
}

impl TieBreak {
    /// The smaller endpoint of every edge; used when no cover is known.
    pub fn canonical(original: &Graph) -> TieBreak {
        TieBreak { choice: original.edges().map(|(u, v)| ((u, v), u)).collect() }
    }

    /// The smaller endpoint of every edge that lies in `cover`.
    pub fn for_cover(original: &Graph, cover: &BTreeSet<VertexId>) -> Result<TieBreak, ReductionError> {
        let mut choice = BTreeMap::new();
        for (u, v) in original.edges() {
            let pick = [u, v]
                .into_iter()
                .find(|x| cover.contains(x))
                .ok_or_else(|| ReductionError::NotACover(original.name(u).to_owned(), original.name(v).to_owned()))?;
            choice.insert((u, v), pick);
        }
        Ok(TieBreak { choice })
    }

    /// Arbitrary choices; each must be an endpoint of its edge.
    pub fn from_choices(
        original: &Graph,
        choices: impl IntoIterator<Item = ((VertexId, VertexId), VertexId)>,
    ) -> Result<TieBreak, ReductionError> {
        let mut choice = BTreeMap::new();
        for ((u, v), f) in choices {
            let (a, b) = (u.min(v), u.max(v));
            if b >= original.vertex_count() || !original.has_edge(a, b) {
                return Err(ReductionError::UnknownEdge(u.to_string(), v.to_string()));
            }
            if f != a && f != b {
                return Err(ReductionError::InconsistentTieBreak(
                    original.name(a).to_owned(),
                    original.name(b).to_owned(),
                ));
            }
            choice.insert((a, b), f);
        }
        Ok(TieBreak { choice })
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        self.choice.get(&(u.min(v), u.max(v))).copied()
    }

    fn checked(&self, gm: &GadgetMap, u: VertexId, v: VertexId) -> Result<VertexId, ReductionError> {
        self.get(u, v).filter(|&f| f == u || f == v).ok_or_else(|| {
            let (a, b) = gm.edge_name(u, v);
            ReductionError::InconsistentTieBreak(a, b)
        })
    }
}

/// A violated normalization property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NormalizationViolation {
    /// (1) `hub ∈ ℓ(vertex)` although `N[hub] ⊊ N[vertex]`.
    DominatedHub { vertex: VertexId, hub: VertexId },
    /// (2) `w ∉ ℓ(vertex)`.
    MissingUniversalHub { vertex: VertexId },
    /// (2) padding vertex `hub` appears in a label other than its own.
    PaddingHub { vertex: VertexId, hub: VertexId },
    /// (3) `v.1 ∈ ℓ(v.2)` but `|ℓ_v| ≤ 2`; `vertex` is original.
    VertexGadget { vertex: VertexId },
    /// (4) `u.1 ∉ ℓ(u.2)`, `v.1 ∉ ℓ(v.2)` and `|ℓ_uv| ≤ 3`; original edge.
    EdgeGadget { u: VertexId, v: VertexId },
}

impl NormalizationViolation {
    /// Which of the four properties is violated.
    pub fn property(&self) -> u8 {
        match self {
            NormalizationViolation::DominatedHub { .. } => 1,
            NormalizationViolation::MissingUniversalHub { .. } | NormalizationViolation::PaddingHub { .. } => 2,
            NormalizationViolation::VertexGadget { .. } => 3,
            NormalizationViolation::EdgeGadget { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationReport {
    pub normalized: bool,
    pub violations: Vec<NormalizationViolation>,
}

impl NormalizationReport {
    pub fn holds(&self, property: u8) -> bool {
        self.violations.iter().all(|v| v.property() != property)
    }
}

fn check_graph(g: &Graph, gm: &GadgetMap) -> Result<(), ReductionError> {
    if g != &gm.constructed {
        return Err(ReductionError::GadgetMismatch);
    }
    Ok(())
}

/// Checks the four normalization properties of a labeling of the constructed
/// graph. Assumes `l` is a valid labeling.
pub fn is_normalized(g: &Graph, l: &Labeling, gm: &GadgetMap) -> Result<NormalizationReport, ReductionError> {
    check_graph(g, gm)?;
    l.check_domain(g.vertex_count())?;
    let mut violations = Vec::new();

    for (vertex, hub, _) in l.assignments() {
        if closed_neighborhood_proper_subset(g, hub, vertex) {
            violations.push(NormalizationViolation::DominatedHub { vertex, hub });
        }
    }

    for vertex in g.vertices() {
        if !l.contains(vertex, gm.hub) {
            violations.push(NormalizationViolation::MissingUniversalHub { vertex });
        }
    }
    let padding: BTreeSet<VertexId> = gm.padding.iter().copied().collect();
    for (vertex, hub, _) in l.assignments() {
        if vertex != hub && padding.contains(&hub) {
            violations.push(NormalizationViolation::PaddingHub { vertex, hub });
        }
    }

    for v in gm.original.vertices() {
        let [v1, v2, _] = gm.triple(v)?;
        if l.contains(v2, v1) && vertex_restriction(l, gm, v)?.len() <= 2 {
            violations.push(NormalizationViolation::VertexGadget { vertex: v });
        }
    }
    for (u, v) in gm.original_edges() {
        let [u1, u2, _] = gm.triple(u)?;
        let [v1, v2, _] = gm.triple(v)?;
        if !l.contains(u2, u1) && !l.contains(v2, v1) && edge_restriction(l, gm, u, v)?.len() <= 3 {
            violations.push(NormalizationViolation::EdgeGadget { u, v });
        }
    }

    Ok(NormalizationReport { normalized: violations.is_empty(), violations })
}

/// Rewrites a valid labeling so that properties (1) and (2) hold.
///
/// Step A moves every dominated hub `u ∈ ℓ(v)` (`N[u] ⊊ N[v]`) to
/// `v ∈ ℓ(u)`. Step B replaces padding hubs by `w`, resets every padding
/// label to `{x, w}` and adds `w` to every label. Validity is preserved.
pub fn normalize(g: &Graph, l: &Labeling, gm: &GadgetMap) -> Result<Labeling, ReductionError> {
    check_graph(g, gm)?;
    l.check_domain(g.vertex_count())?;
    let mut out = l.clone();

    loop {
        let dominated: Vec<(VertexId, VertexId)> = out
            .assignments()
            .filter(|&(v, u, _)| closed_neighborhood_proper_subset(g, u, v))
            .map(|(v, u, _)| (v, u))
            .collect();
        if dominated.is_empty() {
            break;
        }
        for (v, u) in dominated {
            out.remove(v, u);
            out.insert(u, v, 1);
        }
    }

    let w = gm.hub;
    let from_w = single_source_distances(g, w);
    let dist_w = |z: VertexId| from_w[z].expect("constructed graph is connected");
    let padding: BTreeSet<VertexId> = gm.padding.iter().copied().collect();
    for y in g.vertices() {
        let foreign: Vec<VertexId> = out.hubs(y).keys().copied().filter(|h| *h != y && padding.contains(h)).collect();
        for x in foreign {
            out.remove(y, x);
            out.insert(y, w, dist_w(y));
        }
    }
    for &x in &gm.padding {
        out.clear_label(x);
        out.insert(x, x, 0);
    }
    for z in g.vertices() {
        out.insert(z, w, dist_w(z));
    }
    Ok(out)
}

/// Size of the labeling [`vc_to_labeling`] produces for a cover of size
/// `cover_size`: `3|X| + 2(|V'| − |X|) + 3|E'| + 2|V| − 1`.
pub fn forward_labeling_size(gm: &GadgetMap, cover_size: usize) -> usize {
    let n0 = gm.original.vertex_count();
    3 * cover_size + 2 * (n0 - cover_size) + 3 * gm.original.edge_count() + 2 * gm.constructed.vertex_count() - 1
}

/// Maps a vertex cover `X` of `G'` to a hub labeling of `G`.
///
/// Gadgets of cover vertices get `ℓ(v.i) ⊇ {v.j | j < i}`, the others
/// `ℓ(v.1) ∋ v.2` and `ℓ(v.3) ∋ v.2`. For every edge with `f(uv) = v` the
/// three vertices of `u`'s gadget get hub `v.1`. Finally every vertex gets
/// itself and `w`.
pub fn vc_to_labeling(gm: &GadgetMap, cover: &BTreeSet<VertexId>, tb: &TieBreak) -> Result<Labeling, ReductionError> {
    let g0 = &gm.original;
    if let Some(&v) = cover.iter().find(|&&v| v >= g0.vertex_count()) {
        return Err(ReductionError::UnknownVertex(v));
    }
    if let Some((u, v)) = g0.edges().find(|(u, v)| !cover.contains(u) && !cover.contains(v)) {
        let (a, b) = gm.edge_name(u, v);
        return Err(ReductionError::NotACover(a, b));
    }

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for v in g0.vertices() {
        let [v1, v2, v3] = gm.triple(v)?;
        if cover.contains(&v) {
            pairs.extend([(v2, v1), (v3, v1), (v3, v2)]);
        } else {
            pairs.extend([(v1, v2), (v3, v2)]);
        }
    }
    for (a, b) in g0.edges() {
        let f = tb.checked(gm, a, b)?;
        if !cover.contains(&f) {
            let (x, y) = gm.edge_name(a, b);
            return Err(ReductionError::InconsistentTieBreak(x, y));
        }
        let other = if f == a { b } else { a };
        let hub = gm.triple(f)?[0];
        pairs.extend(gm.triple(other)?.map(|x| (x, hub)));
    }
    let g = &gm.constructed;
    for x in g.vertices() {
        pairs.push((x, x));
        pairs.push((x, gm.hub));
    }

    let mut from: BTreeMap<VertexId, Vec<Option<u32>>> = BTreeMap::new();
    let mut l = Labeling::new(g.vertex_count());
    for (v, h) in pairs {
        let dist = from.entry(h).or_insert_with(|| single_source_distances(g, h))[v].expect("connected");
        l.insert(v, h, dist);
    }
    Ok(l)
}

/// `X₁ ∪ X₂` with `X₁ = {v | |ℓ_v| > 2}` and `X₂ = {f(uv) | |ℓ_uv| > 3}`.
///
/// For any valid labeling the result is a vertex cover of `G'`; for a
/// normalized labeling of size at most `k` it has size at most `k'`.
pub fn labeling_to_vc(l: &Labeling, gm: &GadgetMap, tb: &TieBreak) -> Result<BTreeSet<VertexId>, ReductionError> {
    l.check_domain(gm.constructed.vertex_count())?;
    let mut cover = BTreeSet::new();
    for v in gm.original.vertices() {
        if vertex_restriction(l, gm, v)?.len() > 2 {
            cover.insert(v);
        }
    }
    for (u, v) in gm.original_edges() {
        let f = tb.checked(gm, u, v)?;
        if edge_restriction(l, gm, u, v)?.len() > 3 {
            cover.insert(f);
        }
    }
    Ok(cover)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

/// Every assertion made by [`roundtrip_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub k_prime: usize,
    pub gamma: usize,
    pub k: usize,
    pub constructed_vertices: usize,
    pub constructed_edges: usize,
    pub min_cover_size: usize,
    pub vc_status: String,
    /// Whether `(G', k')` is a yes-instance, when the cover solver finished.
    pub vc_answer: Option<bool>,
    pub ohl_answer: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// No executed check failed.
    pub passed: bool,
}

impl RoundtripReport {
    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        self.checks.push(Check { name: name.to_owned(), outcome, detail: detail.into() });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_owned(), outcome: Outcome::Skipped, detail: detail.into() });
    }

    pub fn outcome(&self, name: &str) -> Option<Outcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.outcome)
    }
}

/// Runs both directions of the reduction on `(G', k')`.
///
/// Solves the cover exactly; on a yes-instance maps the cover to a labeling,
/// verifies it and maps it back. Then asks the exact hub-labeling search
/// whether `(G, k)` is a yes-instance and compares the answers. Checks the
/// budget does not allow are reported as skipped.
pub fn roundtrip_check(vc: &VcInstance, limits: SolveLimits) -> Result<RoundtripReport, ReductionError> {
    let (ohl, gm) = build_ohl_instance(vc)?;
    let g = &ohl.graph;
    let vc_result = exact_minimum_vertex_cover(&vc.graph, limits);
    let cover = vc_result.solution.clone().unwrap_or_default();
    let vc_optimal = vc_result.status == SolveStatus::Optimal;
    let vc_answer = if cover.len() <= vc.budget {
        Some(true)
    } else if vc_optimal {
        Some(false)
    } else {
        None
    };

    let mut report = RoundtripReport {
        k_prime: vc.budget,
        gamma: gm.gamma(),
        k: ohl.budget,
        constructed_vertices: g.vertex_count(),
        constructed_edges: g.edge_count(),
        min_cover_size: cover.len(),
        vc_status: vc_result.status.as_str().to_owned(),
        vc_answer,
        ohl_answer: String::new(),
        checks: Vec::new(),
        notes: Vec::new(),
        passed: true,
    };
    report.check(
        "construction_arithmetic",
        gm.gamma() == 8 * vc.graph.vertex_count() + 3 * vc.graph.edge_count() + vc.budget + 2
            && ohl.budget == 3 * gm.gamma() - 1
            && g.vertex_count() == 1 + gm.gamma() + 3 * vc.graph.vertex_count(),
        format!("gamma={} k={} |V|={}", gm.gamma(), ohl.budget, g.vertex_count()),
    );
    if vc_optimal {
        report.check("vc_solved", true, format!("minimum cover size {}", cover.len()));
    } else {
        report.skip("vc_solved", "vertex cover search hit its limits");
    }

    let d = all_pairs_distances(g);
    if vc_answer == Some(true) {
        let tb = TieBreak::for_cover(&vc.graph, &cover)?;
        let l = vc_to_labeling(&gm, &cover, &tb)?;
        let valid = verify(g, &d, &l)?.valid;
        report.check("forward_labeling_valid", valid, "labeling built from the cover passes the verifier");
        report.check(
            "forward_labeling_within_k",
            l.size() <= ohl.budget,
            format!("size {} vs k {}", l.size(), ohl.budget),
        );
        report.check(
            "forward_labeling_size_formula",
            l.size() == forward_labeling_size(&gm, cover.len()),
            format!("size {} vs closed form {}", l.size(), forward_labeling_size(&gm, cover.len())),
        );
        let norm = is_normalized(g, &l, &gm)?;
        report.check("forward_labeling_normalized", norm.normalized, format!("{} violations", norm.violations.len()));
        let back = labeling_to_vc(&l, &gm, &tb)?;
        report.check("backward_is_cover", is_vertex_cover(&vc.graph, &back), "extracted set covers every edge");
        report.check(
            "backward_size",
            back.len() <= cover.len() && back.len() <= vc.budget,
            format!("extracted {} vs original {} and k' {}", back.len(), cover.len(), vc.budget),
        );
    } else {
        let why = if vc_answer == Some(false) {
            "no cover of size k' exists, the forward direction is vacuous"
        } else {
            "cover size unknown within limits"
        };
        for name in ["forward_labeling_valid", "forward_labeling_within_k", "backward_is_cover", "backward_size"] {
            report.skip(name, why);
        }
        report.notes.push("only the exact hub-labeling search can certify a no-instance of the constructed problem".into());
    }

    let decision = decide_ohl(g, ohl.budget, limits);
    report.ohl_answer = decision.as_str().to_owned();
    match (&decision, vc_answer) {
        (Decision::Unknown, _) => {
            report.skip("ohl_agrees_with_vc", "hub-labeling search hit its limits");
            report.notes.push("hub-labeling decision left unknown by the solve limits".into());
        }
        (_, None) => report.skip("ohl_agrees_with_vc", "vertex cover answer unknown"),
        (dec, Some(yes)) => {
            let ohl_yes = matches!(dec, Decision::Yes(_));
            report.check("ohl_agrees_with_vc", ohl_yes == yes, format!("vc {yes}, ohl {}", dec.as_str()));
        }
    }
    if let Decision::Yes(witness) = &decision {
        let valid = verify(g, &d, witness)?.valid;
        report.check("ohl_witness_valid", valid && witness.size() <= ohl.budget, format!("size {}", witness.size()));
        let normalized = normalize(g, witness, &gm)?;
        let tb = TieBreak::canonical(&vc.graph);
        let back = labeling_to_vc(&normalized, &gm, &tb)?;
        report.check(
            "ohl_witness_to_cover",
            is_vertex_cover(&vc.graph, &back) && back.len() <= vc.budget,
            format!("extracted cover of size {}", back.len()),
        );
    }

    report.passed = report.checks.iter().all(|c| c.outcome != Outcome::Fail);
    Ok(report)
}
