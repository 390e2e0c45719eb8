use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use charpoly::analysis::{self, ClassifyOptions, VerifyOptions};
use charpoly::builtins;
use charpoly::graphs::{self, Multigraph, SpanningTree};
use charpoly::lattices::{m_lattice, GraphLattice};
use charpoly::polyhedra::{self, HPolytope, PolyError, VPolytope};
use charpoly::polytopes::{self, LoopConvention};
use charpoly::rational::EdgeVector;

#[derive(Parser, Debug)]
#[command(
    name = "charpoly",
    version,
    about = "Exact polytopes of trivalent graphs and spanning trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Builtin graph name or path to a graph file.
    #[arg(long, global = true)]
    graph: Option<String>,

    /// Comma-separated tree edge ids, or `all`.
    #[arg(long, global = true)]
    tree: Option<String>,

    #[arg(long, global = true, default_value_t = 3)]
    k_max: usize,

    #[arg(long, global = true)]
    genus: Option<usize>,

    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for classification; 0 picks the core count.
    #[arg(long, global = true, env = "CHARPOLY_WORKERS", default_value_t = 0)]
    workers: usize,

    /// Lattice-point limit before a verdict becomes indeterminate.
    #[arg(long, global = true, default_value_t = polyhedra::DEFAULT_POINT_CAP)]
    point_cap: usize,

    /// Include the slow checks (Petersen graph, genus 5).
    #[arg(long, global = true)]
    stretch: bool,

    /// Time budget in seconds for each stretch check.
    #[arg(long, global = true, default_value_t = 1800)]
    budget_secs: u64,

    #[arg(long, global = true, value_enum, default_value_t = Which::Q)]
    polytope: Which,

    /// Leave out the leaf rows `w(e) >= 0` of the tree polytope.
    #[arg(long, global = true)]
    no_leaf_nonneg: bool,

    /// Run the normality check during classification.
    #[arg(long, global = true)]
    idp: bool,

    /// Per-record wall-clock times in classification output.
    #[arg(long, global = true)]
    timing: bool,

    /// Triangle rows at loop vertices; `omit` is a deliberately broken control.
    #[arg(long, global = true, value_enum, default_value_t = Loops::HalfEdge)]
    loop_convention: Loops,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Print the inequality description of a polytope.
    Build,
    /// Print the vertices of a polytope.
    Vertices,
    /// List the lattice points of a polytope.
    LatticePoints,
    /// Decide reflexivity of Q for one or all trees.
    Reflexive,
    /// Check the integer decomposition property of P.
    Idp,
    /// Divisor rays of Q and of the dual cone.
    Rays,
    /// Classify every graph and tree of a genus.
    Classify,
    /// Run the built-in suite of known results.
    VerifyPaper,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "delta")]
    Delta,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Loops {
    HalfEdge,
    Omit,
}

/// A configuration problem: exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn load_graph(cli: &Cli) -> Result<(Multigraph, Option<SpanningTree>)> {
    let Some(spec) = cli.graph.as_deref() else {
        return usage("--graph is required for this command");
    };
    if let Some((g, t)) = builtins::by_name(spec) {
        return Ok((g, Some(t)));
    }
    let text = match std::fs::read_to_string(spec) {
        Ok(t) => t,
        Err(e) => {
            return usage(format!(
                "--graph: {spec} is neither a builtin ({}) nor a readable file: {e}",
                builtins::NAMES.join(", ")
            ))
        }
    };
    let (g, tree) = match graphs::parse_graph_text(&text) {
        Ok(x) => x,
        Err(e) => return usage(format!("--graph: {e}")),
    };
    let tree = match tree {
        Some(ids) if g.edge_count() + 1 != g.vertex_count() => match SpanningTree::new(&g, ids) {
            Ok(t) => Some(t),
            Err(e) => return usage(format!("--graph: tree line: {e}")),
        },
        _ => None,
    };
    Ok((g, tree))
}

fn parse_ids(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Usage(format!("--tree: `{s}` is not an edge id")).into())
        })
        .collect()
}

/// The trees named by `--tree`, falling back to the graph's default.
fn trees(cli: &Cli, g: &Multigraph, default: Option<SpanningTree>) -> Result<Vec<SpanningTree>> {
    match cli.tree.as_deref() {
        Some("all") => Ok(graphs::spanning_trees(g)?),
        Some(spec) => match SpanningTree::new(g, parse_ids(spec)?) {
            Ok(t) => Ok(vec![t]),
            Err(e) => usage(format!("--tree: {e}")),
        },
        None => match default {
            Some(t) => Ok(vec![t]),
            None => Ok(vec![graphs::spanning_trees(g)?.remove(0)]),
        },
    }
}

fn single_tree(cli: &Cli, g: &Multigraph, default: Option<SpanningTree>) -> Result<SpanningTree> {
    if cli.tree.as_deref() == Some("all") {
        return usage("--tree all is only accepted by `reflexive`");
    }
    Ok(trees(cli, g, default)?.remove(0))
}

fn convention(cli: &Cli) -> LoopConvention {
    match cli.loop_convention {
        Loops::HalfEdge => LoopConvention::HalfEdge,
        Loops::Omit => LoopConvention::Omit,
    }
}

/// The selected polytope together with the lattice it is measured against.
fn selected_polytope(cli: &Cli) -> Result<(HPolytope, GraphLattice)> {
    let (g, default) = load_graph(cli)?;
    if cli.polytope == Which::Delta {
        // a tree on its own, or the tree of a graph
        let tree_graph = if g.edge_count() + 1 == g.vertex_count() {
            g
        } else {
            let t = single_tree(cli, &g, default)?;
            Multigraph::new(
                g.vertex_count(),
                t.tree_edges().iter().map(|&e| g.endpoints(e)),
            )?
        };
        let p = polytopes::polytope_delta_with(&tree_graph, !cli.no_leaf_nonneg)?;
        let lattice = GraphLattice::even(tree_graph.edge_count());
        return Ok((p, lattice));
    }
    let t = single_tree(cli, &g, default)?;
    let p = match cli.polytope {
        Which::P => polytopes::polytope_p(&g, &t)?,
        _ => polytopes::polytope_q_with(&g, &t, convention(cli))?,
    };
    Ok((p, m_lattice(&g)?))
}

fn matrix_table(dim: usize, columns: &[EdgeVector]) -> String {
    let cells: Vec<Vec<String>> = columns.iter().map(|c| c.to_strings()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for i in 0..dim {
        let line: Vec<String> = cells.iter().map(|c| format!("{:>width$}", c[i])).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

fn vrep_table(v: &VPolytope) -> String {
    let mut out = format!("{} vertices\n", v.vertices.len());
    out += &matrix_table(v.ambient_dim, &v.vertices);
    if !v.rays.is_empty() {
        let _ = writeln!(out, "{} rays", v.rays.len());
        out += &matrix_table(v.ambient_dim, &v.rays);
    }
    out
}

fn hrep_table(p: &HPolytope) -> String {
    let mut out = String::new();
    for r in p.rows() {
        let _ = writeln!(out, "{:<14} {} >= {}", r.label.to_string(), r.normal, r.rhs);
    }
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn emit(cli: &Cli, json: Value, table: impl FnOnce() -> String) -> Result<()> {
    let text = match cli.format {
        Format::Json => pretty(&json),
        Format::Table => table(),
    };
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if cli.point_cap == 0 {
        return usage("--point-cap must be positive");
    }
    match cli.command {
        Command::Build => {
            let (p, _) = selected_polytope(cli)?;
            emit(cli, serde_json::to_value(p.to_json())?, || hrep_table(&p))?;
        }
        Command::Vertices => {
            let (p, _) = selected_polytope(cli)?;
            let v = polyhedra::vertices(&p)?;
            emit(cli, serde_json::to_value(&v)?, || vrep_table(&v))?;
        }
        Command::LatticePoints => {
            let (p, l) = selected_polytope(cli)?;
            let pts = match polyhedra::lattice_points_capped(&p, &l, cli.point_cap) {
                Err(e @ PolyError::ResourceLimit { .. }) => {
                    let why = e.to_string();
                    return emit(
                        cli,
                        json!({ "count": null, "points": null, "indeterminate": why }),
                        || format!("indeterminate: {why}\n"),
                    )
                    .map(|_| true);
                }
                other => other?,
            };
            emit(cli, json!({ "count": pts.len(), "points": pts }), || {
                format!(
                    "{} lattice points\n{}",
                    pts.len(),
                    matrix_table(p.ambient_dim(), &pts)
                )
            })?;
        }
        Command::Reflexive => {
            let (g, default) = load_graph(cli)?;
            let mut results = Vec::new();
            for t in trees(cli, &g, default)? {
                let r = analysis::check_reflexive(&g, &t)?;
                results.push((t, r));
            }
            let json = Value::Array(
                results
                    .iter()
                    .map(|(t, r)| {
                        let mut v = serde_json::to_value(r).expect("serializable");
                        v["tree"] = json!(t.tree_edges());
                        v
                    })
                    .collect(),
            );
            emit(cli, json, || {
                let mut out =
                    String::from("tree            reflexive  vertices  in-M  dual  interior\n");
                for (t, r) in &results {
                    let _ = writeln!(
                        out,
                        "{:<15} {:<10} {:<9} {:<5} {:<5} {}",
                        t.to_string(),
                        yes(r.reflexive),
                        r.vertex_count,
                        yes(r.non_lattice_vertices.is_empty()),
                        yes(r.dual_check),
                        yes(r.origin_interior)
                    );
                    for v in &r.non_lattice_vertices {
                        let _ = writeln!(out, "  outside M: {v}");
                    }
                }
                out
            })?;
        }
        Command::Idp => {
            let (g, default) = load_graph(cli)?;
            let t = single_tree(cli, &g, default)?;
            let n = analysis::check_idp_capped(&g, &t, cli.k_max, cli.point_cap)?;
            emit(cli, serde_json::to_value(&n)?, || {
                let status = match (&n.indeterminate, n.failures.is_empty()) {
                    (Some(why), _) => format!("indeterminate ({why})"),
                    (None, true) => "holds".to_string(),
                    (None, false) => "fails".to_string(),
                };
                let mut out = format!(
                    "decomposition property up to degree {}: {status}\n",
                    cli.k_max
                );
                let _ = writeln!(out, "lattice points per degree: {:?}", n.point_counts);
                for f in &n.failures {
                    let _ = writeln!(out, "  degree {}: {}", f.degree, f.point);
                }
                out
            })?;
        }
        Command::Rays => {
            let (g, default) = load_graph(cli)?;
            let t = single_tree(cli, &g, default)?;
            let anti = polytopes::anticanonical_rays(&g, &t)?;
            let cone = polytopes::dual_cone_rays(&g, &t)?;
            let as_json = |rays: &[polytopes::DivisorRay]| {
                Value::Array(rays.iter().map(|r| json!({ "kind": format!("{:?}", r.kind), "generator": r.generator })).collect())
            };
            emit(
                cli,
                json!({ "anticanonical": as_json(&anti), "dual_cone": as_json(&cone) }),
                || {
                    let mut out = String::from("anticanonical rays\n");
                    for r in &anti {
                        let _ = writeln!(out, "  {:?} {}", r.kind, r.generator);
                    }
                    out += "dual cone rays\n";
                    for r in &cone {
                        let _ = writeln!(out, "  {:?} {}", r.kind, r.generator);
                    }
                    out
                },
            )?;
        }
        Command::Classify => {
            let Some(genus) = cli.genus else {
                return usage("--genus is required for classify");
            };
            let options = ClassifyOptions {
                workers: cli.workers,
                idp_k_max: cli.idp.then_some(cli.k_max),
                point_cap: cli.point_cap,
                allow_genus_five: cli.stretch,
                timing: cli.timing,
            };
            let records = match analysis::classify(genus, &options) {
                Err(analysis::AnalysisError::GenusOutOfRange(g)) => {
                    return usage(format!("--genus: {g} is outside 2..=4 (5 needs --stretch)"))
                }
                other => other?,
            };
            emit(cli, analysis::report_json(&records), || {
                let mut out = String::from(
                    "#   tree             reflexive  vertices  loop-tree  obstruction  edges\n",
                );
                for (i, r) in records.iter().enumerate() {
                    let edges: Vec<String> = r
                        .graph
                        .edges()
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect();
                    let _ = writeln!(
                        out,
                        "{:<3} {:<16} {:<10} {:<9} {:<10} {:<12} {}",
                        i,
                        r.tree.to_string(),
                        yes(r.reflexivity.reflexive),
                        r.q_vertex_count,
                        yes(r.loop_tree),
                        yes(r.obstruction_applicable),
                        edges.join(" ")
                    );
                }
                out
            })?;
        }
        Command::VerifyPaper => {
            let options = VerifyOptions {
                convention: convention(cli),
                stretch: cli.stretch,
                stretch_budget: std::time::Duration::from_secs(cli.budget_secs),
                workers: cli.workers,
                ..Default::default()
            };
            let report = analysis::verify_paper(&options);
            if cli.format == Format::Json {
                eprint!("{}", report.checklist());
            }
            emit(cli, serde_json::to_value(&report)?, || report.checklist())?;
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
