use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use hyperstab::constructions::{complete, complete_uniform, extremal_hknm, random_hypergraph, random_min_degree};
use hyperstab::harness::{self, archive, Options, RunParams, Status, VerificationReport};
use hyperstab::links::census;
use hyperstab::shifting::{shift, shift_closure, shift_closure_traced};
use hyperstab::solvers::{max_matching_with, min_vertex_cover_with, perfect_matching, Budget};
use hyperstab::{Error, HypergraphJson, KPartiteHypergraph, VertexRef};

/// Exact matching, cover and stability tools for k-partite k-graphs.
///
/// Machine-readable JSON goes to stdout, human summaries to stderr.
/// Exit codes: 0 success, 1 claim FAIL, 2 usage or format error, 3 budget abort.
#[derive(Parser)]
#[command(name = "hyperstab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph as JSON
    #[command(subcommand)]
    Gen(GenCmd),
    /// Compute ν, τ or a perfect matching of a hypergraph file
    Solve(SolveArgs),
    /// Apply one shift or the full shifting closure
    Shift(ShiftArgs),
    /// Link-system tools
    #[command(subcommand)]
    Links(LinksCmd),
    /// Run a claim's verification suite, or `all`
    Verify(VerifyArgs),
    /// Counterexample searches
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand)]
enum GenCmd {
    /// The extremal construction H_k(n, m)
    Extremal {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The complete k-partite k-graph
    Complete {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, required_unless_present = "sizes")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Uniformly random graph with a fixed edge count
    Random {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random graph with minimum vertex degree at least `delta`
    MinDegree {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long)]
    nu: bool,
    #[arg(long)]
    tau: bool,
    /// Search for a perfect matching
    #[arg(long)]
    pm: bool,
    /// Node budget per solver call
    #[arg(long, env = "HYPERSTAB_BUDGET")]
    budget: Option<u64>,
}

#[derive(Args)]
struct ShiftArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    closure: bool,
    /// One shift `class,x,y` moving position y to x
    #[arg(long, value_delimiter = ',')]
    pair: Option<Vec<usize>>,
    /// Write the closure sequence G_0..G_t here
    #[arg(long, requires = "closure")]
    trace: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LinksCmd {
    /// The 64-configuration census as JSON
    Census,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id (e.g. thm-1.2, lem-2.5) or `all`
    claim: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Edge count, where the suite takes one
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    exhaustive: bool,
    /// Pinned small parameter set (the default for `all`)
    #[arg(long)]
    small: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory receiving counterexample files
    #[arg(long)]
    archive: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = "HYPERSTAB_BUDGET")]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Annealed search against the k >= 4 stability conjecture
    Conjecture {
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Number of proposed moves
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        archive: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Node budget per solver call
        #[arg(long, env = "HYPERSTAB_BUDGET")]
        node_budget: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Budget { .. }) { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn budget(limit: Option<u64>) -> Budget {
    Budget { node_limit: limit }
}

fn read_graph(path: &Path) -> Result<KPartiteHypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    KPartiteHypergraph::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
}

fn gen(cmd: GenCmd) -> Result<(), Failure> {
    let (h, output) = match cmd {
        GenCmd::Extremal { k, n, m, output } => (extremal_hknm(k, n, m)?, output),
        GenCmd::Complete { k, n, sizes, output } => {
            let h = match (sizes, n) {
                (Some(s), _) => {
                    if s.len() != k {
                        return Err(usage(format!("--sizes has {} entries, expected {k}", s.len())));
                    }
                    complete(&s)?
                }
                (None, Some(n)) => complete_uniform(k, n),
                (None, None) => unreachable!("clap requires --n or --sizes"),
            };
            (h, output)
        }
        GenCmd::Random {
            k,
            sizes,
            edges,
            seed,
            output,
        } => (random_hypergraph(k, &sizes, edges, seed)?, output),
        GenCmd::MinDegree {
            k,
            n,
            delta,
            seed,
            output,
        } => (random_min_degree(k, n, delta, seed)?, output),
    };
    eprintln!("generated {} edges on sizes {:?}", h.edge_count(), h.sizes());
    emit(&h.to_json(), output.as_deref())
}

fn solve(args: SolveArgs) -> Result<(), Failure> {
    let h = read_graph(&args.file)?;
    let b = budget(args.budget);
    let (want_nu, want_tau) = if args.nu || args.tau || args.pm {
        (args.nu, args.tau)
    } else {
        (true, true)
    };
    let mut out = Map::new();
    if want_nu {
        let m = max_matching_with(&h, b)?;
        out.insert("nu".into(), json!(m.len()));
        out.insert("matching".into(), json!(m.edges));
    }
    if want_tau {
        let c = min_vertex_cover_with(&h, b)?;
        out.insert("tau".into(), json!(c.len()));
        let list: Vec<[usize; 2]> = c.vertices.iter().map(|v| [v.class, v.pos]).collect();
        out.insert("cover".into(), json!(list));
    }
    if args.pm {
        let pm = perfect_matching(&h)?;
        out.insert("perfect_matching".into(), json!(pm.map(|m| m.edges)));
    }
    emit(&Value::Object(out).to_string(), None)
}

fn shift_cmd(args: ShiftArgs) -> Result<(), Failure> {
    let h = read_graph(&args.file)?;
    let result = if let Some(p) = args.pair {
        let [c, x, y] = p[..] else {
            return Err(usage("--pair takes class,x,y"));
        };
        shift(&h, VertexRef::new(c, x), VertexRef::new(c, y))?
    } else if let Some(trace_path) = &args.trace {
        let trace = shift_closure_traced(&h);
        let graphs: Vec<HypergraphJson> = trace.graphs.iter().map(HypergraphJson::from).collect();
        let text = json!({"steps": trace.steps, "graphs": graphs}).to_string();
        emit(&text, Some(trace_path))?;
        eprintln!("closure took {} shifts", trace.steps.len());
        trace.graphs.last().expect("trace starts with the input").clone()
    } else {
        shift_closure(&h)
    };
    emit(&result.to_json(), args.output.as_deref())
}

fn write_reports(reports: &[VerificationReport], archive_dir: Option<&Path>) -> Result<bool, Failure> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let mut failed = false;
    for r in reports {
        writeln!(lock, "{}", r.to_json_line()).map_err(|e| usage(e.to_string()))?;
        eprintln!(
            "{:<14} {:<11} tested {:>7}  skipped {:>7}  counterexamples {}",
            r.claim_id,
            format!("{:?}", r.status).to_uppercase(),
            r.instances_tested,
            r.instances_skipped,
            r.counterexamples.len()
        );
        failed |= r.status == Status::Fail;
        if let Some(dir) = archive_dir {
            archive::archive_report(dir, r)?;
        }
    }
    Ok(failed)
}

fn verify(args: VerifyArgs) -> Result<bool, Failure> {
    set_jobs(args.jobs);
    let opts = Options {
        budget: budget(args.budget),
    };
    let reports = if args.claim == "all" {
        harness::run_small(args.seed, opts)?
    } else {
        if harness::claim(&args.claim).is_none() {
            let known: Vec<&str> = harness::CLAIMS.iter().map(|c| c.id).collect();
            return Err(usage(format!(
                "unknown claim `{}` (known: {}, all)",
                args.claim,
                known.join(", ")
            )));
        }
        let params = if args.small {
            RunParams::default()
        } else {
            RunParams {
                k: args.k,
                n: args.n,
                m: args.m,
                sizes: args.sizes,
                e: args.e,
                trials: args.trials,
                exhaustive: args.exhaustive,
            }
        };
        harness::run_claim(&args.claim, &params, args.seed, opts)?
    };
    write_reports(&reports, args.archive.as_deref())
}

fn search(cmd: SearchCmd) -> Result<(), Failure> {
    let SearchCmd::Conjecture {
        k,
        n,
        m,
        budget: steps,
        seed,
        archive: dir,
        jobs,
        node_budget,
    } = cmd;
    set_jobs(jobs);
    let report = harness::conjecture_search(
        k,
        n,
        m,
        steps,
        seed,
        Options {
            budget: budget(node_budget),
        },
    )?;
    if let Some(dir) = &dir {
        let paths = archive::archive_report(dir, &report)?;
        eprintln!("archived {} candidates in {}", paths.len(), dir.display());
    }
    write_reports(std::slice::from_ref(&report), None)?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Gen(cmd) => gen(cmd).map(|_| false),
        Command::Solve(args) => solve(args).map(|_| false),
        Command::Shift(args) => shift_cmd(args).map(|_| false),
        Command::Links(LinksCmd::Census) => {
            emit(&serde_json::to_string(&census()).expect("census serializes"), None).map(|_| false)
        }
        Command::Verify(args) => verify(args),
        Command::Search(cmd) => search(cmd).map(|_| false),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
