use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use tdec::bounds::graph_bounds;
use tdec::coloring::validate;
use tdec::graph::{to_edge_list, to_graph6, Family};
use tdec::harness::{self, parse_coloring, read_graph, Format, RunConfig, TransformOp};
use tdec::solver::{
    solve_exact, solve_oracle_enumeration, BranchingOrder, SolveResult, SolveStats, SolveStatus,
    SolverOptions,
};

const EXIT_ERROR: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_TIMED_OUT: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tdec",
    version,
    about = "Total dominator edge chromatic numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    LineDegreeDesc,
    InputOrder,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph, e.g. `path:7`, `wheel:5`, `complete_bipartite:3,2`.
    Gen {
        spec: Family,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: GraphFormat,
    },
    /// Exact TDEC with a witness. Exit 0 exact, 2 infeasible, 3 timed out.
    Solve {
        file: PathBuf,
        /// Seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        #[arg(long, value_enum, default_value = "line-degree-desc")]
        order: Order,
        /// Also run both brute-force oracles when the graph is small enough.
        #[arg(long)]
        cross_check: bool,
    },
    /// Every known lower and upper bound for the graph.
    Bounds { file: PathBuf },
    /// Check a coloring file against a graph. Exit 4 if it is not a TDE-coloring.
    Validate { file: PathBuf, coloring: PathBuf },
    /// subdivide:K, delete-vertex:V, delete-edge:U-V or contract:U-V.
    Transform {
        file: PathBuf,
        #[arg(long)]
        op: TransformOp,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a theorem-check suite (`list` prints them). Exit 4 if a check fails.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Omit timestamps and runtimes for reproducible output.
        #[arg(long)]
        no_meta: bool,
        /// Per-instance timeout in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        /// Skip exact solves on more edges than this.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Order of the labeled graph corpus.
        #[arg(long, default_value_t = harness::DEFAULT_ENUM_VERTICES)]
        max_vertices: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

type CmdResult = Result<u8, String>;

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("module types serialize");
    s.push('\n');
    s
}

fn seconds(s: f64) -> Result<Duration, String> {
    Duration::try_from_secs_f64(s).map_err(|_| format!("bad timeout {s}"))
}

fn load(file: &Path) -> Result<tdec::Graph, String> {
    read_graph(file).map_err(|e| e.to_string())
}

fn solve(file: &Path, timeout: f64, method: Method, order: Order, cross_check: bool) -> CmdResult {
    let g = load(file)?;
    let result = match method {
        Method::Exact => {
            let opts = SolverOptions {
                timeout: Some(seconds(timeout)?),
                branching_order: match order {
                    Order::LineDegreeDesc => BranchingOrder::LineDegreeDesc,
                    Order::InputOrder => BranchingOrder::InputOrder,
                },
                oracle_cross_check: cross_check,
                ..Default::default()
            };
            solve_exact(&g, &opts)
        }
        Method::Oracle => {
            let start = Instant::now();
            let value = solve_oracle_enumeration(&g, g.edge_count()).map_err(|e| e.to_string())?;
            SolveResult {
                status: if value.is_some() {
                    SolveStatus::Exact
                } else {
                    SolveStatus::Infeasible
                },
                value,
                witness: None,
                proven_lower: value.unwrap_or(0),
                proven_upper: value.unwrap_or(0),
                stats: SolveStats {
                    elapsed_ms: start.elapsed().as_millis() as u64,
                    ..Default::default()
                },
                oracle_agreement: None,
            }
        }
    };
    print!("{}", json(&result));
    Ok(match result.status {
        SolveStatus::Exact => 0,
        SolveStatus::Infeasible => EXIT_INFEASIBLE,
        SolveStatus::TimedOut => EXIT_TIMED_OUT,
    })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            spec,
            output,
            format,
        } => {
            let g = spec.build().map_err(|e| e.to_string())?;
            let text = match format {
                GraphFormat::EdgeList => to_edge_list(&g),
                GraphFormat::Graph6 => to_graph6(&g) + "\n",
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Solve {
            file,
            timeout,
            method,
            order,
            cross_check,
        } => solve(&file, timeout, method, order, cross_check),
        Command::Bounds { file } => {
            let g = load(&file)?;
            match graph_bounds(&g) {
                Ok(r) => {
                    print!("{}", json(&r));
                    Ok(0)
                }
                Err(tdec::bounds::BoundsError::Infeasible) => {
                    eprintln!("tdec: graph has a K2 component and admits no TDE-coloring");
                    Ok(EXIT_INFEASIBLE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Validate { file, coloring } => {
            let g = load(&file)?;
            let text = std::fs::read_to_string(&coloring)
                .map_err(|e| format!("{}: {e}", coloring.display()))?;
            let c = parse_coloring(&text).map_err(|e| e.to_string())?;
            let report = validate(&g, &c).map_err(|e| e.to_string())?;
            print!("{}", json(&report));
            Ok(if report.valid { 0 } else { EXIT_CHECK_FAILED })
        }
        Command::Transform { file, op, output } => {
            let g = load(&file)?;
            let h = op.apply(&g).map_err(|e| e.to_string())?;
            emit(&to_edge_list(&h), output.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            format,
            no_meta,
            timeout,
            max_edges,
            max_vertices,
            output,
        } => {
            if suite == "list" {
                harness::SUITES.iter().for_each(|s| println!("{s}"));
                return Ok(0);
            }
            let config = RunConfig {
                timeout: seconds(timeout)?,
                max_solve_edges: max_edges,
                max_enum_vertices: max_vertices,
                max_n,
                threads: None,
            };
            let mut report = harness::run_suite(&suite, &config).map_err(|e| e.to_string())?;
            if no_meta {
                report = report.without_meta();
            }
            let format = match format {
                ReportFormat::Json => Format::Json,
                ReportFormat::Csv => Format::Csv,
                ReportFormat::Table => Format::Table,
            };
            emit(&report.render(format), output.as_deref())?;
            let s = report.summary;
            eprintln!(
                "{suite}: {} passed, {} failed, {} skipped",
                s.passed, s.failed, s.skipped
            );
            Ok(if report.all_passed() {
                0
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("tdec: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
