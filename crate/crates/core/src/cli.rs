//! The `rainbow` command line tool.
//!
//! Exit codes: 0 success, 1 a check or suite failed, 2 usage or input error,
//! 3 a search budget ran out before the answer was settled.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check::{Mode, RainbowChecker};
use crate::claims::colorings::structural_labels;
use crate::claims::{paper_coloring, verify_suite, ColoringKind, ColoringSpec, SuiteId, SuiteParams};
use crate::coloring::VertexColoring;
use crate::families::{generate, thm4_graph, FamilySpec};
use crate::graph::{all_pairs_distances, Graph, UNREACHABLE};
use crate::solver::{
    oracle_exact, search_monotonicity_violation, Deleted, SearchBudget, Solver, Status, Variant,
    EXACT_ORACLE_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest order `solve` accepts without an explicit budget.
pub const SOLVE_GUARD: usize = 24;
/// Largest order exhaustive suites sweep without an explicit budget.
pub const SWEEP_GUARD: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow vertex-connection numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family member as an edge list.
    Gen(GenArgs),
    /// Print the diameter and optionally the distance matrix.
    Dist {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        matrix: bool,
    },
    /// Check whether a coloring is rainbow (strongly) vertex-connected.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        paper_labels: bool,
    },
    /// Compute rvc or srvc exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Cross-check against brute force (small graphs only).
        #[arg(long)]
        oracle: bool,
        /// Write the optimal coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        paper_labels: bool,
        #[arg(long)]
        stats: bool,
    },
    /// Write one of the explicit constructions as a coloring file.
    PaperColoring {
        /// thm1, lemma3, lemma4, thm4-rvc or thm4-srvc.
        #[arg(long)]
        kind: ColoringKind,
        /// Target graph; generated from --n or --a/--b when omitted.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: SuiteId,
        #[arg(long)]
        min: Option<usize>,
        #[arg(long)]
        max: Option<usize>,
        /// `a,b` pairs for the glued-graph suites, e.g. `5,6;6,8`.
        #[arg(long, value_parser = parse_pairs)]
        pairs: Option<PairList>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Tsv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        stats: bool,
    },
    /// Look for a connected subgraph with smaller srvc.
    SearchViolation {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Comma separated part sizes.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Search node limit per solve.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall clock limit in seconds per solve.
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> Result<SearchBudget, String> {
        let max_time = match self.budget_secs {
            Some(s) if !(s.is_finite() && s > 0.0) => return Err(format!("invalid --budget-secs {s}")),
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(SearchBudget {
            max_nodes: self.budget_nodes,
            max_time,
        })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Bipartite,
    Multipartite,
    Wheel,
    Wheel2,
    Thm4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Tsv,
    Jsonl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Edge,
    Vertex,
}

#[derive(Clone, Debug)]
struct PairList(Vec<(usize, usize)>);

fn parse_pairs(s: &str) -> Result<PairList, String> {
    s.split(';')
        .map(|pair| {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| format!("expected a,b in {pair:?}"))?;
            let a = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
            let b = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
            Ok((a, b))
        })
        .collect::<Result<_, String>>()
        .map(PairList)
}

/// Outcome of a subcommand other than its payload.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing the payload to `out` and diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match thread_pool() {
        Ok(Some(pool)) => pool.install(|| dispatch(cli.command, out, err)),
        Ok(None) => dispatch(cli.command, out, err),
        Err(f) => Err(f),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// A pool capped by `RVC_THREADS`, if set.
fn thread_pool() -> Result<Option<rayon::ThreadPool>, Failure> {
    let Ok(value) = std::env::var("RVC_THREADS") else {
        return Ok(None);
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| usage(format!("RVC_THREADS must be a positive integer, got {value:?}")))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| usage(e.to_string()))?;
    Ok(Some(pool))
}

fn dispatch(command: Command, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> CmdResult {
    match command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Dist { graph, matrix } => cmd_dist(&graph, matrix, out),
        Command::Check {
            graph,
            coloring,
            mode,
            paper_labels,
        } => cmd_check(&graph, &coloring, mode, paper_labels, out),
        Command::Solve {
            graph,
            mode,
            budget,
            oracle,
            witness,
            paper_labels,
            stats,
        } => {
            let opts = SolveOpts {
                mode,
                budget: budget.to_budget().map_err(usage)?,
                oracle,
                witness,
                paper_labels,
                stats,
            };
            cmd_solve(&graph, opts, out, err)
        }
        Command::PaperColoring {
            kind,
            graph,
            n,
            a,
            b,
            out: path,
        } => cmd_paper_coloring(kind, graph.as_deref(), n, a, b, path.as_deref(), out),
        Command::Verify {
            suite,
            min,
            max,
            pairs,
            samples,
            seed,
            budget,
            format,
            out: path,
            stats,
        } => {
            let mut params = SuiteParams {
                min,
                max,
                budget: budget.to_budget().map_err(usage)?,
                pairs: pairs.map(|p| p.0),
                ..SuiteParams::default()
            };
            if let Some(s) = samples {
                params.samples = s;
            }
            if let Some(s) = seed {
                params.seed = s;
            }
            cmd_verify(suite, params, format, path.as_deref(), stats, out, err)
        }
        Command::SearchViolation {
            max_n,
            variant,
            budget,
        } => {
            let variant = match variant {
                VariantArg::Edge => Variant::Edge,
                VariantArg::Vertex => Variant::Vertex,
            };
            cmd_search_violation(max_n, variant, &budget.to_budget().map_err(usage)?, out)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("{family} requires --{flag}")))
}

fn family_spec(args: &GenArgs) -> Result<FamilySpec, Failure> {
    Ok(match args.family {
        FamilyKind::Path => FamilySpec::Path {
            n: need(args.n, "n", "path")?,
        },
        FamilyKind::Cycle => FamilySpec::Cycle {
            n: need(args.n, "n", "cycle")?,
        },
        FamilyKind::Complete => FamilySpec::Complete {
            n: need(args.n, "n", "complete")?,
        },
        FamilyKind::Bipartite => FamilySpec::Bipartite {
            s: need(args.s, "s", "bipartite")?,
            t: need(args.t, "t", "bipartite")?,
        },
        FamilyKind::Multipartite => FamilySpec::Multipartite {
            parts: args
                .parts
                .clone()
                .ok_or_else(|| usage("multipartite requires --parts"))?,
        },
        FamilyKind::Wheel => FamilySpec::Wheel {
            n: need(args.n, "n", "wheel")?,
        },
        FamilyKind::Wheel2 => FamilySpec::Wheel2 {
            n: need(args.n, "n", "wheel2")?,
        },
        FamilyKind::Thm4 => FamilySpec::Thm4 {
            a: need(args.a, "a", "thm4")?,
            b: need(args.b, "b", "thm4")?,
        },
    })
}

fn emit(text: &str, path: Option<&Path>, out: &mut (dyn Write + Send)) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn cmd_gen(args: GenArgs, out: &mut (dyn Write + Send)) -> CmdResult {
    let spec = family_spec(&args)?;
    let g = generate(&spec)?;
    emit(&g.to_edge_list(Some(&spec.to_string())), args.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_dist(path: &Path, matrix: bool, out: &mut (dyn Write + Send)) -> CmdResult {
    let g = read_graph(path)?;
    let dist = all_pairs_distances(&g);
    let mut text = String::new();
    match dist.diameter() {
        Some(d) => writeln!(text, "diameter\t{d}"),
        None => writeln!(text, "diameter\tinf"),
    }
    .expect("writing to a string");
    if matrix {
        for u in g.vertices() {
            let row: Vec<String> = dist
                .row(u)
                .iter()
                .map(|&d| if d == UNREACHABLE { "-".to_string() } else { d.to_string() })
                .collect();
            writeln!(text, "{}", row.join(" ")).expect("writing to a string");
        }
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn labeler(g: &Graph, paper_labels: bool) -> impl Fn(usize) -> String {
    let labels = if paper_labels { structural_labels(g) } else { None };
    move |v| match &labels {
        Some(l) => l[v].clone(),
        None => v.to_string(),
    }
}

fn cmd_check(
    graph: &Path,
    coloring: &Path,
    mode: Mode,
    paper_labels: bool,
    out: &mut (dyn Write + Send),
) -> CmdResult {
    let g = read_graph(graph)?;
    let c = VertexColoring::parse(&read_file(coloring)?).map_err(|e| usage(format!("{}: {e}", coloring.display())))?;
    let report = RainbowChecker::new(&g)?.check(&c, mode)?;
    let label = labeler(&g, paper_labels);
    match report.failing_pair {
        None => {
            writeln!(out, "valid\t{mode}\t{} pairs", report.pairs_checked)?;
            Ok(EXIT_OK)
        }
        Some((u, v)) => {
            writeln!(out, "invalid\t{mode}\tfailing pair ({},{})", label(u), label(v))?;
            Ok(EXIT_FAILED)
        }
    }
}

struct SolveOpts {
    mode: Mode,
    budget: SearchBudget,
    oracle: bool,
    witness: Option<PathBuf>,
    paper_labels: bool,
    stats: bool,
}

fn cmd_solve(path: &Path, opts: SolveOpts, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> CmdResult {
    let g = read_graph(path)?;
    if g.order() > SOLVE_GUARD && !opts.budget.is_limited() {
        return Err(usage(format!(
            "order {} exceeds {SOLVE_GUARD}; pass --budget-nodes or --budget-secs",
            g.order()
        )));
    }
    let mode = opts.mode;
    let start = Instant::now();
    let result = Solver::new(&g)?.compute(mode, &opts.budget)?;
    let mut text = format!("{}\n", result.value);
    match &result.status {
        Status::Exact => text.push_str("status\texact\n"),
        Status::Unknown {
            largest_none,
            smallest_found,
        } => {
            let show = |x: &Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                text,
                "status\tunknown\tlargest_none={}\tsmallest_found={}",
                show(largest_none),
                show(smallest_found)
            )
            .expect("writing to a string");
        }
    }
    let mut code = if result.is_exact() { EXIT_OK } else { EXIT_BUDGET };
    if opts.oracle {
        if g.order() > EXACT_ORACLE_LIMIT {
            return Err(usage(format!("--oracle needs order <= {EXACT_ORACLE_LIMIT}")));
        }
        let expected = oracle_exact(&g, mode)?;
        let agrees = result.is_exact() && result.value == expected;
        writeln!(text, "oracle\t{expected}\t{}", if agrees { "agree" } else { "disagree" }).expect("writing to a string");
        if result.is_exact() && !agrees {
            code = EXIT_FAILED;
        }
    }
    if let Some(w) = &result.witness {
        if opts.paper_labels {
            let label = labeler(&g, true);
            for (v, color) in w.colors().iter().enumerate() {
                writeln!(text, "{}\t{color}", label(v)).expect("writing to a string");
            }
        }
        if let Some(p) = &opts.witness {
            write_file(p, &w.to_text(g.order()))?;
        }
    }
    out.write_all(text.as_bytes())?;
    if opts.stats {
        writeln!(
            err,
            "nodes\t{}\nelapsed\t{:.3}s",
            result.nodes_explored,
            start.elapsed().as_secs_f64()
        )?;
    }
    Ok(code)
}

fn cmd_paper_coloring(
    kind: ColoringKind,
    graph: Option<&Path>,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    path: Option<&Path>,
    out: &mut (dyn Write + Send),
) -> CmdResult {
    let pair = || -> Result<(usize, usize), Failure> { Ok((need(a, "a", "thm4")?, need(b, "b", "thm4")?)) };
    let spec = match kind {
        ColoringKind::Thm1 => ColoringSpec::DiametralGeodesic,
        ColoringKind::Lemma3 => ColoringSpec::Wheel2Rvc {
            n: need(n, "n", "lemma3")?,
        },
        ColoringKind::Lemma4 => ColoringSpec::Wheel2Srvc {
            n: need(n, "n", "lemma4")?,
        },
        ColoringKind::Thm4Rvc => {
            let (a, b) = pair()?;
            ColoringSpec::GluedRvc { a, b }
        }
        ColoringKind::Thm4Srvc => {
            let (a, b) = pair()?;
            ColoringSpec::GluedSrvc { a, b }
        }
    };
    let g = match (graph, spec) {
        (Some(p), _) => read_graph(p)?,
        (None, ColoringSpec::DiametralGeodesic) => return Err(usage("thm1 requires --graph")),
        (None, ColoringSpec::Wheel2Rvc { n } | ColoringSpec::Wheel2Srvc { n }) => {
            generate(&FamilySpec::Wheel2 { n })?
        }
        (None, ColoringSpec::GluedRvc { a, b } | ColoringSpec::GluedSrvc { a, b }) => thm4_graph(a, b)?,
    };
    let coloring = paper_coloring(spec, &g)?;
    emit(&coloring.to_text(g.order()), path, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: SuiteId,
    params: SuiteParams,
    format: ReportFormat,
    path: Option<&Path>,
    stats: bool,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> CmdResult {
    let (_, default_max) = suite.default_range();
    let max = params.max.unwrap_or(default_max);
    if suite.is_exhaustive() && max > SWEEP_GUARD && !params.budget.is_limited() {
        return Err(usage(format!(
            "sweeping order {max} exceeds {SWEEP_GUARD}; pass --budget-nodes or --budget-secs"
        )));
    }
    let start = Instant::now();
    let report = verify_suite(suite, &params)?;
    let text = match format {
        ReportFormat::Tsv => report.to_tsv(),
        ReportFormat::Jsonl => report.to_jsonl(),
    };
    emit(&text, path, out)?;
    if stats {
        writeln!(err, "rows\t{}\nelapsed\t{:.3}s", report.rows.len(), start.elapsed().as_secs_f64())?;
    }
    Ok(if report.failed() {
        EXIT_FAILED
    } else if report.indeterminate() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn cmd_search_violation(max_n: usize, variant: Variant, budget: &SearchBudget, out: &mut (dyn Write + Send)) -> CmdResult {
    match search_monotonicity_violation(max_n, variant, budget) {
        Ok(None) => {
            writeln!(out, "none\tmax_n={max_n}")?;
            Ok(EXIT_OK)
        }
        Ok(Some(v)) => {
            let deleted = match v.deleted {
                Deleted::Vertex(x) => format!("vertex {x}"),
                Deleted::Edge(x, y) => format!("edge {x}-{y}"),
            };
            let edges: Vec<String> = v.graph_edges.iter().map(|(x, y)| format!("{x}-{y}")).collect();
            writeln!(
                out,
                "violation\tn={}\tedges={}\tdeleted={deleted}\tsrvc_before={}\tsrvc_after={}",
                v.order,
                edges.join(","),
                v.srvc_before,
                v.srvc_after
            )?;
            Ok(EXIT_OK)
        }
        Err(crate::solver::SolveError::BudgetExhausted) => {
            writeln!(out, "unknown\tbudget exhausted")?;
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e.into()),
    }
}
