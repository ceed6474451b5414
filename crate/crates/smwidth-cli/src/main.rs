//! Command-line front end: parse graphs, decompose them, solve problems
//! over the decompositions, consult brute-force oracles, generate
//! bounded-width instances, and run seeded invariant suites.
//!
//! Every command writes exactly one JSON document (schema version in the
//! `format` field) to stdout or, with `--out FILE`, to that file.  Exit
//! codes: 0 on success, 1 on any error, 2 when a decomposition was
//! produced by the uncertified heuristic backend.

mod checks;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, ensure, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use smwidth::branch_dec::{f_width, BranchDecomposition, DEFAULT_EXACT_LIMIT};
use smwidth::cuts::CutFunction;
use smwidth::dp::RunStats;
use smwidth::graph::{Graph, Vertex, VertexSet};
use smwidth::oracles::{brute_force_solve, Answer, KnownWidthFamily, Problem};
use smwidth::pipeline::{compute_sm_decomposition, PipelineOptions};
use smwidth::solvers::coloring::solve_chromatic;
use smwidth::solvers::eds::solve_eds;
use smwidth::solvers::hamiltonian::solve_hamiltonian;
use smwidth::solvers::maxcut::solve_maxcut;

/// Schema version stamped into every emitted document.
const FORMAT_VERSION: u64 = 1;

/// Exit code for results that rest on the uncertified heuristic backend.
const EXIT_UNCERTIFIED: u8 = 2;

/// One invocation: a command plus the shared knobs.  Identical
/// configuration and seed produce byte-identical output documents.
#[derive(Parser)]
#[command(
    name = "smw",
    version,
    about = "Split-matching branch decompositions and exact solvers over them"
)]
struct RunConfig {
    #[command(subcommand)]
    command: Command,

    /// Largest prime piece the exhaustive decomposition backend accepts.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,

    /// Fall back to the bisection heuristic for pieces above the exact
    /// limit instead of refusing; the result is then uncertified.
    #[arg(long, global = true)]
    heuristic: bool,

    /// Seed determining every randomized corpus.
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,

    /// Write the JSON document to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Print progress notes to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a branch decomposition of the graph and report its
    /// split-matching width.
    Decompose {
        /// Graph file: edge-list (`n m` header, `u v` lines) or DIMACS.
        input: PathBuf,
    },
    /// Solve a problem exactly by dynamic programming over a branch
    /// decomposition of the graph.
    Solve {
        /// One of: maxcut, hc, chromatic, eds.
        problem: Problem,
        /// Graph file: edge-list (`n m` header, `u v` lines) or DIMACS.
        input: PathBuf,
        /// Reuse a decomposition document produced by `decompose`
        /// instead of computing one.
        #[arg(long, value_name = "FILE")]
        decomposition: Option<PathBuf>,
    },
    /// Answer with the brute-force reference implementation instead of
    /// the decomposition solver.
    Oracle {
        /// One of: maxcut, hc, chromatic, eds.
        problem: Problem,
        /// Graph file: edge-list (`n m` header, `u v` lines) or DIMACS.
        input: PathBuf,
    },
    /// Generate a pseudorandom graph from a family with a declared
    /// width bound.
    Generate {
        /// One of: tree, cycle, clique, distance-hereditary,
        /// twin-cover, glued.
        family: String,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Family parameter; required by twin-cover and glued.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a seeded invariant suite; exits nonzero on any violation and
    /// prints the counterexample graph.
    Check {
        /// Which suite to run.
        suite: Suite,
    },
}

/// The invariant suites behind `smw check`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Cut-function submodularity on random graphs and side pairs.
    Submodularity,
    /// Exact width spot values and pipeline width bounds.
    Widths,
    /// Decomposition solvers against the brute-force oracles.
    Solvers,
    /// Join outputs preserve completability of their inputs.
    Preserves,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Submodularity => "submodularity",
            Suite::Widths => "widths",
            Suite::Solvers => "solvers",
            Suite::Preserves => "preserves",
        }
    }
}

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            // Usage problems are plain errors (exit 1); only the help and
            // version screens exit clean, keeping 2 free for uncertified
            // results.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cfg: &RunConfig) -> anyhow::Result<ExitCode> {
    match &cfg.command {
        Command::Decompose { input } => cmd_decompose(cfg, input),
        Command::Solve { problem, input, decomposition } => {
            cmd_solve(cfg, *problem, input, decomposition.as_deref())
        }
        Command::Oracle { problem, input } => cmd_oracle(cfg, *problem, input),
        Command::Generate { family, n, k } => cmd_generate(cfg, family, *n, *k),
        Command::Check { suite } => cmd_check(cfg, *suite),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

fn read_graph(cfg: &RunConfig, path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let g = Graph::parse(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    if cfg.verbose {
        eprintln!("parsed graph with {} vertices and {} edges", g.n(), g.m());
    }
    Ok(g)
}

fn pipeline_options(cfg: &RunConfig) -> PipelineOptions {
    PipelineOptions { exact_limit: cfg.exact_limit, allow_heuristic: cfg.heuristic }
}

/// Writes the document, pretty-printed with a trailing newline, to the
/// configured destination.
fn emit(cfg: &RunConfig, doc: &Value) -> anyhow::Result<()> {
    let rendered = format!("{doc:#}\n");
    match &cfg.out {
        Some(path) => fs::write(path, rendered)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn input_doc(g: &Graph) -> Value {
    json!({ "n": g.n(), "m": g.m() })
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

fn cmd_decompose(cfg: &RunConfig, input: &Path) -> anyhow::Result<ExitCode> {
    let g = read_graph(cfg, input)?;
    let result = compute_sm_decomposition(&g, &pipeline_options(cfg))?;
    let certified = result.certified();
    if cfg.verbose {
        eprintln!(
            "decomposition width {} (parameter {}, certified: {certified})",
            result.report.width, result.k_used
        );
    }
    let doc = json!({
        "format": FORMAT_VERSION,
        "command": "decompose",
        "input": input_doc(&g),
        "function": "sm",
        "width": result.report.width,
        "certified": certified,
        "k_used": result.k_used,
        "decomposition": serde_json::to_value(&result.decomposition)?,
        "primes": serde_json::to_value(&result.primes)?,
        "cuts": serde_json::to_value(&result.report.cuts)?,
    });
    emit(cfg, &doc)?;
    Ok(if certified { ExitCode::SUCCESS } else { ExitCode::from(EXIT_UNCERTIFIED) })
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

fn cmd_solve(
    cfg: &RunConfig,
    problem: Problem,
    input: &Path,
    decomposition: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let g = read_graph(cfg, input)?;
    let (bd, dec_doc) = match decomposition {
        Some(path) => {
            let bd = load_decomposition(path)?;
            ensure!(
                bd.vertices() == g.vertices(),
                "the decomposition's leaves map to {} but the graph's vertices are {}",
                bd.vertices(),
                g.vertices()
            );
            let width = f_width(&bd, &g, CutFunction::Sm)?.width;
            (bd, json!({ "source": "file", "width": width, "certified": false }))
        }
        None => {
            let result = compute_sm_decomposition(&g, &pipeline_options(cfg))?;
            let dec_doc = json!({
                "source": "computed",
                "width": result.report.width,
                "certified": result.certified(),
            });
            (result.decomposition, dec_doc)
        }
    };

    let (answer, witness, stats) = match problem {
        Problem::MaxCut => {
            let sol = solve_maxcut(&g, &bd)?;
            verify_cut_side(&g, &sol.witness, sol.size)?;
            (Answer::Value(sol.size), json!({ "side": sol.witness.to_vec() }), sol.stats)
        }
        Problem::HamiltonianCycle => {
            let sol = solve_hamiltonian(&g, &bd)?;
            let witness = match (&sol.cycle, sol.hamiltonian) {
                (Some(cycle), true) => {
                    verify_cycle(&g, cycle)?;
                    json!({ "cycle": cycle })
                }
                (None, false) => Value::Null,
                _ => bail!("the decision and its witness disagree"),
            };
            (Answer::Decision(sol.hamiltonian), witness, sol.stats)
        }
        Problem::Chromatic => {
            let sol = solve_chromatic(&g, &bd)?;
            verify_coloring(&g, &sol.coloring, sol.chromatic_number)?;
            let classes: Vec<Vec<Vertex>> =
                sol.coloring.iter().map(|c| c.to_vec()).collect();
            (Answer::Value(sol.chromatic_number), json!({ "classes": classes }), sol.stats)
        }
        Problem::EdgeDominatingSet => {
            let sol = solve_eds(&g, &bd)?;
            verify_edge_domination(&g, &sol.edges, sol.size)?;
            (Answer::Value(sol.size), json!({ "edges": sol.edges }), sol.stats)
        }
    };

    let doc = solve_doc(&g, problem, &dec_doc, &answer, witness, &stats)?;
    emit(cfg, &doc)?;
    Ok(ExitCode::SUCCESS)
}

fn solve_doc(
    g: &Graph,
    problem: Problem,
    dec_doc: &Value,
    answer: &Answer,
    witness: Value,
    stats: &RunStats,
) -> anyhow::Result<Value> {
    Ok(json!({
        "format": FORMAT_VERSION,
        "command": "solve",
        "problem": problem.name(),
        "input": input_doc(g),
        "decomposition": dec_doc,
        "answer": serde_json::to_value(answer)?,
        "witness": witness,
        "stats": serde_json::to_value(stats)?,
    }))
}

/// Accepts either a full `decompose` document or a bare decomposition
/// object; the tree shape is re-validated on the way in.
fn load_decomposition(path: &Path) -> anyhow::Result<BranchDecomposition> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let doc: Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not JSON", path.display()))?;
    let node = doc.get("decomposition").cloned().unwrap_or(doc);
    serde_json::from_value(node)
        .with_context(|| format!("{} holds no valid decomposition", path.display()))
}

// ---------------------------------------------------------------------------
// Witness re-verification: nothing is printed that was not checked
// against the graph first.
// ---------------------------------------------------------------------------

fn verify_cut_side(g: &Graph, side: &VertexSet, size: usize) -> anyhow::Result<()> {
    ensure!(
        side.is_subset(&g.vertices()),
        "cut side names vertices outside the graph"
    );
    let crossing = g.crossing_edges(side).len();
    ensure!(
        crossing == size,
        "witness side crosses {crossing} edges but {size} were claimed"
    );
    Ok(())
}

fn verify_cycle(g: &Graph, cycle: &[Vertex]) -> anyhow::Result<()> {
    ensure!(g.n() >= 3, "a graph on {} vertices has no cycle", g.n());
    ensure!(
        cycle.len() == g.n(),
        "cycle visits {} vertices, the graph has {}",
        cycle.len(),
        g.n()
    );
    let distinct: VertexSet = cycle.iter().copied().collect();
    ensure!(
        distinct == g.vertices(),
        "cycle is not a permutation of the vertex set"
    );
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        ensure!(g.has_edge(u, v), "cycle step {u}-{v} is not an edge");
    }
    Ok(())
}

fn verify_coloring(g: &Graph, classes: &[VertexSet], count: usize) -> anyhow::Result<()> {
    ensure!(
        classes.len() == count,
        "coloring uses {} classes but {count} were claimed",
        classes.len()
    );
    let mut seen = VertexSet::new();
    for class in classes {
        ensure!(!class.is_empty(), "a color class is empty");
        for v in class.iter() {
            ensure!(seen.insert(v), "vertex {v} is colored twice");
        }
    }
    ensure!(seen == g.vertices(), "the coloring does not cover every vertex");
    for (u, v) in g.edges() {
        let monochromatic = classes.iter().any(|c| c.contains(u) && c.contains(v));
        ensure!(!monochromatic, "edge {u}-{v} is monochromatic");
    }
    Ok(())
}

fn verify_edge_domination(
    g: &Graph,
    edges: &[(Vertex, Vertex)],
    size: usize,
) -> anyhow::Result<()> {
    ensure!(
        edges.len() == size,
        "witness holds {} edges but {size} were claimed",
        edges.len()
    );
    for &(u, v) in edges {
        ensure!(g.has_edge(u, v), "witness edge {u}-{v} is not in the graph");
    }
    for (a, b) in g.edges() {
        let dominated =
            edges.iter().any(|&(u, v)| u == a || u == b || v == a || v == b);
        ensure!(dominated, "edge {a}-{b} shares no endpoint with the witness");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn cmd_oracle(cfg: &RunConfig, problem: Problem, input: &Path) -> anyhow::Result<ExitCode> {
    let g = read_graph(cfg, input)?;
    let answer = brute_force_solve(problem, &g)?;
    let doc = json!({
        "format": FORMAT_VERSION,
        "command": "oracle",
        "problem": problem.name(),
        "input": input_doc(&g),
        "answer": serde_json::to_value(&answer)?,
    });
    emit(cfg, &doc)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

fn cmd_generate(
    cfg: &RunConfig,
    family: &str,
    n: usize,
    k: Option<usize>,
) -> anyhow::Result<ExitCode> {
    let family = parse_family(family, n, k)?;
    let g = family.generate(cfg.seed)?;
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let doc = json!({
        "format": FORMAT_VERSION,
        "command": "generate",
        "family": serde_json::to_value(family)?,
        "seed": cfg.seed,
        "width_bound": family.width_bound(),
        "graph": { "n": g.n(), "m": g.m(), "edges": edges },
        "edge_list": g.to_edge_list()?,
    });
    emit(cfg, &doc)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_family(name: &str, n: usize, k: Option<usize>) -> anyhow::Result<KnownWidthFamily> {
    let family = match name {
        "tree" => KnownWidthFamily::Tree { n },
        "cycle" => KnownWidthFamily::Cycle { n },
        "clique" => KnownWidthFamily::Clique { n },
        "distance-hereditary" => KnownWidthFamily::DistanceHereditary { n },
        "twin-cover" => KnownWidthFamily::TwinCover { k: require_k(name, k)?, n },
        "glued" => KnownWidthFamily::Glued { k: require_k(name, k)?, n },
        other => bail!(
            "unknown family {other:?}; expected tree, cycle, clique, \
             distance-hereditary, twin-cover, or glued"
        ),
    };
    if matches!(
        family,
        KnownWidthFamily::Tree { .. }
            | KnownWidthFamily::Cycle { .. }
            | KnownWidthFamily::Clique { .. }
            | KnownWidthFamily::DistanceHereditary { .. }
    ) {
        ensure!(k.is_none(), "family {name:?} takes no --k");
    }
    Ok(family)
}

fn require_k(name: &str, k: Option<usize>) -> anyhow::Result<usize> {
    k.ok_or_else(|| anyhow!("family {name:?} needs --k"))
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn cmd_check(cfg: &RunConfig, suite: Suite) -> anyhow::Result<ExitCode> {
    if cfg.verbose {
        eprintln!("running the {} suite with seed {}", suite.name(), cfg.seed);
    }
    let outcome = match suite {
        Suite::Submodularity => checks::submodularity(cfg.seed)?,
        Suite::Widths => checks::widths(cfg.seed, cfg.exact_limit)?,
        Suite::Solvers => checks::solvers(cfg.seed, cfg.exact_limit)?,
        Suite::Preserves => checks::preserves(cfg.seed)?,
    };
    let violations = usize::from(outcome.counterexample.is_some());
    let doc = json!({
        "format": FORMAT_VERSION,
        "command": "check",
        "suite": suite.name(),
        "seed": cfg.seed,
        "cases": outcome.cases,
        "violations": violations,
        "counterexample": outcome.counterexample.unwrap_or(Value::Null),
    });
    emit(cfg, &doc)?;
    Ok(if violations == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
