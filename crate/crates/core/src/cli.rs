//! The `ohl` command line tool.
//!
//! Exit codes: 0 for success or a "yes" answer, 1 for a completed run with a
//! negative (or undecided) answer, 2 for usage, parse and I/O errors.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::formats::{
    emit_budget, emit_cover, emit_graph, emit_labeling, emit_manifest, emit_vc, parse_cover, parse_graph,
    parse_labeling, parse_manifest, parse_vc,
};
use crate::graph::{all_pairs_distances, Graph};
use crate::labeling::{greedy_labeling, verify, Labeling};
use crate::reduction::{
    build_ohl_instance, labeling_to_vc, normalize, roundtrip_check, vc_to_labeling, GadgetMap, TieBreak, VcInstance,
};
use crate::solvers::{decide_ohl, exact_minimum_hub_labeling, is_vertex_cover, Decision, SolveLimits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ohl", version, about = "Hub labeling toolkit and Vertex Cover reduction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the hub-labeling instance for a vertex-cover instance.
    Reduce {
        /// VC file (graph plus `k` line).
        input: PathBuf,
        /// Writes `<prefix>.graph`, `<prefix>.budget` and `<prefix>.manifest`.
        prefix: PathBuf,
    },
    /// Check that a labeling is a hub labeling of a graph.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Compute a hub labeling.
    Solve {
        graph: PathBuf,
        #[arg(long, conflicts_with = "greedy", required_unless_present = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
        /// Decide whether a labeling of at most this size exists.
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        limits: LimitArgs,
        /// Labeling output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Map certificates between the two problems.
    Certify {
        #[arg(value_enum)]
        direction: Direction,
        /// Gadget manifest written by `reduce`.
        #[arg(long)]
        manifest: PathBuf,
        /// Vertex cover of the original graph (vc-to-hl).
        #[arg(long, required_if_eq("direction", "vc-to-hl"))]
        cover: Option<PathBuf>,
        /// Labeling of the constructed graph (hl-to-vc).
        #[arg(long, required_if_eq("direction", "hl-to-vc"))]
        labeling: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run both directions of the reduction and print a JSON report.
    Roundtrip {
        input: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Render a graph, optionally with gadgets and hub arcs, as DOT.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
    /// Generate a random graph (or VC instance with `--k`).
    Generate {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    VcToHl,
    HlToVc,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct LimitArgs {
    /// Search-node budget.
    #[arg(long, env = "OHL_MAX_NODES", default_value_t = 50_000_000)]
    pub max_nodes: u64,
    /// Wall-clock budget in seconds.
    #[arg(long, env = "OHL_MAX_TIME_SECS", default_value_t = 60.0)]
    pub max_time_secs: f64,
}

impl LimitArgs {
    fn limits(&self) -> Result<SolveLimits, CliError> {
        let secs = Duration::try_from_secs_f64(self.max_time_secs).map_err(|_| CliError::usage("bad --max-time-secs"))?;
        SolveLimits::new(self.max_nodes, secs).map_err(|e| CliError::usage(e.to_string()))
    }
}

/// An error reported on stderr with an exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_ERROR, message: message.into() }
    }

    fn negative(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_NEGATIVE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Writes `body` to `output`, or `summary` (as comments) and `body` to `out`.
fn emit(out: &mut dyn Write, output: Option<&Path>, summary: &[String], body: &str) -> Result<(), CliError> {
    for line in summary {
        writeln!(out, "# {line}")?;
    }
    match output {
        Some(path) => write_file(path, body),
        None => Ok(out.write_all(body.as_bytes())?),
    }
}

/// Runs one command; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Reduce { input, prefix } => cmd_reduce(&input, &prefix, out),
        Command::Verify { graph, labeling } => cmd_verify(&graph, &labeling, out),
        Command::Solve { graph, exact, greedy: _, budget, limits, output } => {
            cmd_solve(&graph, exact, budget, limits.limits()?, output.as_deref(), out)
        }
        Command::Certify { direction, manifest, cover, labeling, output } => {
            let gm = parse_manifest(&read(&manifest)?)?;
            match direction {
                Direction::VcToHl => {
                    let path = cover.ok_or_else(|| CliError::usage("--cover is required"))?;
                    cmd_certify_vc_to_hl(&gm, &read(&path)?, output.as_deref(), out)
                }
                Direction::HlToVc => {
                    let path = labeling.ok_or_else(|| CliError::usage("--labeling is required"))?;
                    cmd_certify_hl_to_vc(&gm, &read(&path)?, output.as_deref(), out)
                }
            }
        }
        Command::Roundtrip { input, limits } => cmd_roundtrip(&input, limits.limits()?, out),
        Command::Dot { graph, manifest, labeling } => {
            let g = parse_graph(&read(&graph)?)?;
            let gm = manifest.map(|p| read(&p).and_then(|t| Ok(parse_manifest(&t)?))).transpose()?;
            let l = labeling.map(|p| read(&p).and_then(|t| Ok(parse_labeling(&t, &g)?))).transpose()?;
            if gm.as_ref().is_some_and(|gm| gm.constructed() != &g) {
                return Err(CliError::usage("manifest does not describe this graph"));
            }
            out.write_all(export_dot(&g, gm.as_ref(), l.as_ref()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Generate { vertices, edge_prob, seed, k } => {
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(CliError::usage("--edge-prob must be within [0, 1]"));
            }
            let g = random_graph(vertices, edge_prob, seed);
            let text = match k {
                Some(budget) => emit_vc(&VcInstance { graph: g, budget })?,
                None => emit_graph(&g)?,
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_reduce(input: &Path, prefix: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let vc = parse_vc(&read(input)?)?;
    let (ohl, gm) = build_ohl_instance(&vc)?;
    write_file(&with_suffix(prefix, ".graph"), &emit_graph(&ohl.graph)?)?;
    write_file(&with_suffix(prefix, ".budget"), &emit_budget(ohl.budget))?;
    write_file(&with_suffix(prefix, ".manifest"), &emit_manifest(&gm))?;
    writeln!(out, "gamma {}", gm.gamma())?;
    writeln!(out, "k {}", ohl.budget)?;
    writeln!(out, "vertices {}", ohl.graph.vertex_count())?;
    writeln!(out, "edges {}", ohl.graph.edge_count())?;
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, labeling: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = parse_graph(&read(graph)?)?;
    let l = parse_labeling(&read(labeling)?, &g)?;
    let d = all_pairs_distances(&g);
    let report = verify(&g, &d, &l)?;
    writeln!(out, "{}", if report.valid { "valid" } else { "invalid" })?;
    writeln!(out, "size {}", l.size())?;
    for &(u, v) in &report.uncovered {
        writeln!(out, "uncovered {} {}", g.name(u), g.name(v))?;
    }
    for m in &report.distance_mismatches {
        let actual = m.actual.map_or("inf".to_owned(), |d| d.to_string());
        writeln!(out, "distance {} {}@{} actual {}", g.name(m.vertex), g.name(m.hub), m.stored, actual)?;
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_solve(
    graph: &Path,
    exact: bool,
    budget: Option<usize>,
    limits: SolveLimits,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = parse_graph(&read(graph)?)?;
    if g.is_empty() {
        return Err(CliError::usage("graph is empty"));
    }
    let d = all_pairs_distances(&g);

    if let Some(k) = budget {
        let decision = if exact {
            decide_ohl(&g, k, limits)
        } else {
            let l = greedy_labeling(&g, &d);
            if l.size() <= k {
                Decision::Yes(l)
            } else {
                Decision::Unknown
            }
        };
        let mut summary = vec![format!("answer {}", decision.as_str())];
        return match decision {
            Decision::Yes(l) => {
                summary.push(format!("size {}", l.size()));
                emit(out, output, &summary, &emit_labeling(&l, &g))?;
                Ok(EXIT_OK)
            }
            _ => {
                emit(out, None, &summary, "")?;
                Ok(EXIT_NEGATIVE)
            }
        };
    }

    let (l, status) = if exact {
        let r = exact_minimum_hub_labeling(&g, None, limits)?;
        (r.solution.expect("exact search always keeps an incumbent"), r.status.as_str())
    } else {
        (greedy_labeling(&g, &d), "heuristic")
    };
    let summary = vec![format!("size {}", l.size()), format!("status {status}")];
    emit(out, output, &summary, &emit_labeling(&l, &g))?;
    Ok(EXIT_OK)
}

fn cmd_certify_vc_to_hl(gm: &GadgetMap, cover_text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g0 = gm.original();
    let cover = parse_cover(cover_text, g0)?;
    if !is_vertex_cover(g0, &cover) {
        return Err(CliError::negative("input is not a vertex cover of the original graph"));
    }
    let tb = TieBreak::for_cover(g0, &cover)?;
    let l = vc_to_labeling(gm, &cover, &tb)?;
    let summary = vec![format!("size {}", l.size()), format!("k {}", gm.budget())];
    emit(out, output, &summary, &emit_labeling(&l, gm.constructed()))?;
    Ok(EXIT_OK)
}

fn cmd_certify_hl_to_vc(gm: &GadgetMap, labeling_text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = gm.constructed();
    let l = parse_labeling(labeling_text, g)?;
    let d = all_pairs_distances(g);
    let report = verify(g, &d, &l)?;
    if !report.valid {
        return Err(CliError::negative(format!(
            "input is not a valid hub labeling ({} uncovered pairs, {} wrong distances)",
            report.uncovered.len(),
            report.distance_mismatches.len()
        )));
    }
    let normalized = normalize(g, &l, gm)?;
    let cover = labeling_to_vc(&normalized, gm, &TieBreak::canonical(gm.original()))?;
    let summary = vec![
        format!("labeling size {} (k {})", l.size(), gm.budget()),
        format!("cover size {} (k' {})", cover.len(), gm.k_prime()),
    ];
    emit(out, output, &summary, &emit_cover(&cover, gm.original()))?;
    Ok(EXIT_OK)
}

fn cmd_roundtrip(input: &Path, limits: SolveLimits, out: &mut dyn Write) -> Result<i32, CliError> {
    let vc = parse_vc(&read(input)?)?;
    let report = roundtrip_check(&vc, limits)?;
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering: graph edges solid and undirected, gadget triples grouped
/// in clusters, hub assignments dashed arcs from vertex to hub.
pub fn export_dot(g: &Graph, gm: Option<&GadgetMap>, l: Option<&Labeling>) -> String {
    let mut s = String::from("digraph G {\n  node [shape=circle];\n");
    let mut clustered = vec![false; g.vertex_count()];
    if let Some(gm) = gm {
        let g0 = gm.original();
        for v in g0.vertices() {
            let t = gm.triple(v).expect("original vertex");
            s.push_str(&format!("  subgraph {} {{\n    label={};\n", quote(&format!("cluster_{}", g0.name(v))), quote(g0.name(v))));
            for x in t {
                clustered[x] = true;
                s.push_str(&format!("    {};\n", quote(g.name(x))));
            }
            s.push_str("  }\n");
        }
    }
    for v in g.vertices().filter(|&v| !clustered[v]) {
        s.push_str(&format!("  {};\n", quote(g.name(v))));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {} -> {} [dir=none];\n", quote(g.name(u)), quote(g.name(v))));
    }
    if let Some(l) = l {
        for (v, h, _) in l.assignments() {
            s.push_str(&format!("  {} -> {} [style=dashed];\n", quote(g.name(v)), quote(g.name(h))));
        }
    }
    s.push_str("}\n");
    s
}

/// `G(n, p)` on vertices `v1 … vn`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Graph::build(&names, &edges).expect("generated graph is simple")
}
