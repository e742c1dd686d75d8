//! Line-oriented text formats.
//!
//! Graph files hold `#` comments, an optional `p <n> <m>` header, `v <name>`
//! declarations for isolated vertices and one edge per line as two names. A
//! VC file is a graph file plus a single `k <integer>` line. Labeling files
//! have one line per vertex, `<vertex>: <hub>@<dist> ...`, hubs in vertex
//! order. Every emitter writes vertex order, so `emit(parse(emit(x)))` is
//! byte-identical to `emit(x)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::labeling::Labeling;
use crate::reduction::{build_ohl_instance, gadget_name, padding_name, GadgetMap, ReductionError, VcInstance, HUB_NAME};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex name `{0}` cannot be written in this format")]
    UnwritableName(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error("manifest does not match the construction: {0}")]
    Manifest(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

const DIRECTIVES: [&str; 3] = ["p", "v", "k"];

/// Names must survive the line formats: no `:` or `@`, no leading `#`, and
/// not one of the directive letters.
pub fn is_writable_name(name: &str) -> bool {
    !name.is_empty()
        && !name.chars().any(|c| c.is_whitespace() || c == ':' || c == '@')
        && !name.starts_with('#')
        && !DIRECTIVES.contains(&name)
}

fn check_name(line: usize, name: &str) -> Result<(), FormatError> {
    if is_writable_name(name) {
        Ok(())
    } else {
        Err(syntax(line, format!("invalid vertex name `{name}`")))
    }
}

/// Numbered, trimmed, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_graph_inner(text: &str, allow_k: bool) -> Result<(Graph, Option<usize>), FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut k: Option<usize> = None;
    let mut names: Vec<String> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut edges: Vec<(String, String)> = Vec::new();

    fn declare(declared: &mut BTreeSet<String>, names: &mut Vec<String>, name: &str) {
        if declared.insert(name.to_owned()) {
            names.push(name.to_owned());
        }
    }

    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(no, "second `p` header"));
                }
                let [_, n, m] = tokens[..] else {
                    return Err(syntax(no, "expected `p <vertices> <edges>`"));
                };
                let n = n.parse().map_err(|_| syntax(no, format!("bad vertex count `{n}`")))?;
                let m = m.parse().map_err(|_| syntax(no, format!("bad edge count `{m}`")))?;
                header = Some((no, n, m));
            }
            "v" => {
                let [_, name] = tokens[..] else {
                    return Err(syntax(no, "expected `v <name>`"));
                };
                check_name(no, name)?;
                if declared.contains(name) {
                    return Err(syntax(no, format!("vertex `{name}` declared twice")));
                }
                declare(&mut declared, &mut names, name);
            }
            "k" => {
                if !allow_k {
                    return Err(syntax(no, "`k` line is only allowed in VC files"));
                }
                if k.is_some() {
                    return Err(syntax(no, "second `k` line"));
                }
                let [_, value] = tokens[..] else {
                    return Err(syntax(no, "expected `k <integer>`"));
                };
                k = Some(value.parse().map_err(|_| syntax(no, format!("bad budget `{value}`")))?);
            }
            _ => {
                let [a, b] = tokens[..] else {
                    return Err(syntax(no, "expected an edge `<name> <name>`"));
                };
                check_name(no, a)?;
                check_name(no, b)?;
                declare(&mut declared, &mut names, a);
                declare(&mut declared, &mut names, b);
                edges.push((a.to_owned(), b.to_owned()));
            }
        }
    }

    let g = Graph::build(&names, &edges)?;
    if let Some((no, n, m)) = header {
        if n != g.vertex_count() || m != g.edge_count() {
            return Err(syntax(
                no,
                format!("header says {n} vertices and {m} edges, found {} and {}", g.vertex_count(), g.edge_count()),
            ));
        }
    }
    Ok((g, k))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    parse_graph_inner(text, false).map(|(g, _)| g)
}

pub fn emit_graph(g: &Graph) -> Result<String, FormatError> {
    if let Some(bad) = g.names().iter().find(|s| !is_writable_name(s)) {
        return Err(FormatError::UnwritableName(bad.clone()));
    }
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "v {}", g.name(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.name(u), g.name(v)).unwrap();
    }
    Ok(out)
}

pub fn parse_vc(text: &str) -> Result<VcInstance, FormatError> {
    let (graph, k) = parse_graph_inner(text, true)?;
    let budget = k.ok_or_else(|| syntax(0, "missing `k <integer>` line"))?;
    Ok(VcInstance { graph, budget })
}

pub fn emit_vc(vc: &VcInstance) -> Result<String, FormatError> {
    let mut out = emit_graph(&vc.graph)?;
    writeln!(out, "k {}", vc.budget).unwrap();
    Ok(out)
}

/// Parses a labeling of `g`. Vertices without a line get an empty label.
pub fn parse_labeling(text: &str, g: &Graph) -> Result<Labeling, FormatError> {
    let mut l = Labeling::new(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    let lookup = |no: usize, name: &str| g.vertex(name).ok_or_else(|| syntax(no, format!("unknown vertex `{name}`")));
    for (no, line) in content_lines(text) {
        let (head, rest) = line.split_once(':').ok_or_else(|| syntax(no, "expected `<vertex>: <hub>@<dist> ...`"))?;
        let v = lookup(no, head.trim())?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(syntax(no, format!("second line for vertex `{}`", g.name(v))));
        }
        for item in rest.split_whitespace() {
            let (hub, dist) = item.rsplit_once('@').ok_or_else(|| syntax(no, format!("expected `<hub>@<dist>`, got `{item}`")))?;
            let h = lookup(no, hub)?;
            let dist: u32 = dist.parse().map_err(|_| syntax(no, format!("bad distance in `{item}`")))?;
            if l.insert(v, h, dist).is_some() {
                return Err(syntax(no, format!("hub `{hub}` listed twice")));
            }
        }
    }
    Ok(l)
}

pub fn emit_labeling(l: &Labeling, g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(g.name(v));
        out.push(':');
        for (&h, &d) in l.hubs(v) {
            write!(out, " {}@{}", g.name(h), d).unwrap();
        }
        out.push('\n');
    }
    out
}

/// A vertex set given by names, whitespace separated.
pub fn parse_cover(text: &str, g: &Graph) -> Result<BTreeSet<VertexId>, FormatError> {
    let mut out = BTreeSet::new();
    for (no, line) in content_lines(text) {
        for name in line.split_whitespace() {
            let v = g.vertex(name).ok_or_else(|| syntax(no, format!("unknown vertex `{name}`")))?;
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn emit_cover(cover: &BTreeSet<VertexId>, g: &Graph) -> String {
    let names: Vec<&str> = cover.iter().map(|&v| g.name(v)).collect();
    format!("{}\n", names.join(" "))
}

pub fn emit_budget(k: usize) -> String {
    format!("k {k}\n")
}

pub fn parse_budget(text: &str) -> Result<usize, FormatError> {
    let mut k = None;
    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let ["k", value] = tokens[..] else {
            return Err(syntax(no, "expected `k <integer>`"));
        };
        if k.replace(value.parse().map_err(|_| syntax(no, format!("bad budget `{value}`")))?).is_some() {
            return Err(syntax(no, "second `k` line"));
        }
    }
    k.ok_or_else(|| syntax(0, "missing `k <integer>` line"))
}

/// Gadget manifest: the construction parameters and every created name.
pub fn emit_manifest(gm: &GadgetMap) -> String {
    let g0 = gm.original();
    let g = gm.constructed();
    let mut out = String::from("# gadget map\n");
    writeln!(out, "gamma {}", gm.gamma()).unwrap();
    writeln!(out, "k {}", gm.budget()).unwrap();
    writeln!(out, "kprime {}", gm.k_prime()).unwrap();
    writeln!(out, "w {}", g.name(gm.hub())).unwrap();
    let padding: Vec<&str> = gm.padding().iter().map(|&x| g.name(x)).collect();
    writeln!(out, "W {}", padding.join(" ")).unwrap();
    for v in g0.vertices() {
        let t = gm.triple(v).expect("original vertex");
        writeln!(out, "triple {} {} {} {}", g0.name(v), g.name(t[0]), g.name(t[1]), g.name(t[2])).unwrap();
    }
    for (u, v) in g0.edges() {
        writeln!(out, "edge {} {}", g0.name(u), g0.name(v)).unwrap();
    }
    out
}

/// Rebuilds the gadget map from the original vertices, edges and `k'`, and
/// checks every other manifest entry against the rebuilt construction.
pub fn parse_manifest(text: &str) -> Result<GadgetMap, FormatError> {
    let mut scalars: BTreeMap<&str, usize> = BTreeMap::new();
    let mut hub: Option<String> = None;
    let mut padding: Option<Vec<String>> = None;
    let mut triples: Vec<(String, [String; 3])> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();

    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [key @ ("gamma" | "k" | "kprime"), value] => {
                let value = value.parse().map_err(|_| syntax(no, format!("bad integer `{value}`")))?;
                if scalars.insert(key, value).is_some() {
                    return Err(syntax(no, format!("second `{key}` line")));
                }
            }
            ["w", name] => hub = Some(name.to_owned()),
            ["W", ..] => padding = Some(tokens[1..].iter().map(|s| s.to_string()).collect()),
            ["triple", v, a, b, c] => triples.push((v.to_owned(), [a, b, c].map(str::to_owned))),
            ["edge", u, v] => edges.push((u.to_owned(), v.to_owned())),
            _ => return Err(syntax(no, format!("unrecognized manifest line `{line}`"))),
        }
    }
    let get = |key: &str| scalars.get(key).copied().ok_or_else(|| syntax(0, format!("missing `{key}` line")));
    let (gamma, k, k_prime) = (get("gamma")?, get("k")?, get("kprime")?);

    let names: Vec<&str> = triples.iter().map(|(v, _)| v.as_str()).collect();
    let original = Graph::build(&names, &edges)?;
    let (_, gm) = build_ohl_instance(&VcInstance { graph: original, budget: k_prime })?;

    let mismatch = |what: &str| Err(FormatError::Manifest(what.to_owned()));
    if gm.gamma() != gamma {
        return mismatch("gamma");
    }
    if gm.budget() != k {
        return mismatch("k");
    }
    if hub.as_deref() != Some(HUB_NAME) {
        return mismatch("w");
    }
    let expected: Vec<String> = (1..=gamma).map(padding_name).collect();
    if padding.as_ref() != Some(&expected) {
        return mismatch("W");
    }
    for (v, t) in &triples {
        if *t != [1, 2, 3].map(|i| gadget_name(v, i)) {
            return mismatch(&format!("triple {v}"));
        }
    }
    Ok(gm)
}
