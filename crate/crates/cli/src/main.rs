//! `zfl`: command-line front end for random-set zero forcing.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad arguments or inputs outside a
//! command's preconditions, 3 verification found a counterexample.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use zfl_core::experiments::{
    experiment_clique_paths, experiment_figure2, experiment_threshold_orders, p_grid, write_csv, CliqueConfig,
    Figure2Config, OrderFamily, OrdersConfig,
};
use zfl_core::lab::{exact_curve_capped, IntervalKind, McThresholdConfig};
use zfl_core::poly::{ENUMERATION_CAP, ENUMERATION_HARD_CAP};
use zfl_core::structure::{core_project_set, leaf_walks, pendant_trees, two_core};
use zfl_core::verify::{parse_grid, parse_probability, verify, verify_count_dominance};
use zfl_core::{
    closure, graph6, mc_prob, threshold_exact, threshold_mc, zero_forcing_number, Claim, Corpus, Error, Family, Graph,
    SampleConfig, VertexSet,
};

const EXIT_IO: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "zfl", version, about = "Zero forcing with randomly chosen initial sets")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "ZFL_THREADS")]
    threads: Option<usize>,
    /// Write results to FILE instead of stdout.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// A graph given as `[KIND] VALUE`, where KIND is one of `family`, `g6`,
/// `file` or `edges`. Without KIND the value is tried as an edge list
/// (`edges:N:u-v,..`), an existing file, a family descriptor, then graph6.
#[derive(Args)]
struct Input {
    #[arg(value_name = "INPUT", num_args = 1..=2, required = true)]
    input: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as graph6.
    Gen(Input),
    /// Zero forcing set queries.
    Zfs {
        #[command(subcommand)]
        command: ZfsCommand,
    },
    /// Zero forcing number Z(G).
    Zfnum(Input),
    /// Zero forcing polynomial coefficients z(G;k) as CSV `k,z`.
    Poly {
        #[command(flatten)]
        input: Input,
        /// Enumeration cap on the number of vertices.
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        max_n: usize,
        /// Print the exact expansion of Pr[B_p is zero forcing] in powers
        /// of p as CSV `d,coefficient`.
        #[arg(long)]
        rational: bool,
        /// Print JSON `{"n":..,"z":[..]}` with decimal strings.
        #[arg(long)]
        json: bool,
    },
    /// Exact Pr[B_p(G) is zero forcing] as CSV `p,probability`.
    Prob {
        #[command(flatten)]
        input: Input,
        /// Comma separated probabilities; decimals or fractions like 1/3.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<String>,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        max_n: usize,
        /// Evaluate in exact rational arithmetic and print fractions.
        #[arg(long)]
        rational: bool,
    },
    /// Monte Carlo estimate of Pr[B_p(G) is zero forcing].
    Mc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Miss probability of the two-sided interval.
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        /// Wilson score interval instead of Hoeffding.
        #[arg(long)]
        wilson: bool,
    },
    /// Threshold p(G) where Pr[B_p(G) is zero forcing] = 1/2.
    Threshold {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Total sample budget for the Monte Carlo method.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Required for the Monte Carlo method.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// 2-core as graph6 with its vertex map, as JSON.
    Core2 {
        #[command(flatten)]
        input: Input,
        /// Also project this blue set onto the core.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Pendant paths and pendant trees, as JSON.
    Pendants(Input),
    /// Check a claim over a graph corpus; exits 3 on a counterexample.
    Verify {
        /// One of path-count, tree-path, degree-bounds, double-pendant,
        /// leaf-clique, core-projection, min-threshold.
        claim: Claim,
        /// `trees:N`, `trees:A-B`, a graph6 file, or several joined by `+`.
        #[arg(long)]
        corpus: String,
        /// `uniform:M` for {1/M,..,(M-1)/M}, or a comma separated list.
        #[arg(long, default_value = "uniform:20")]
        grid: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random sets per graph for sampled claims.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// For path-count: compare against this family instead of paths,
        /// e.g. `cycle`.
        #[arg(long, default_value = "path")]
        reference: String,
        /// Omit the wall-clock runtime so repeated runs are byte-identical.
        #[arg(long)]
        no_runtime: bool,
    },
    /// Reproducible experiments emitting CSV.
    Experiment {
        #[command(subcommand)]
        command: ExperimentCommand,
    },
}

#[derive(Subcommand)]
enum ZfsCommand {
    /// Close a blue set under the color change rule.
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma separated 0-based vertex indices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Probability curves of path, grid, hypercube and binary tree at 16
    /// and 256 vertices, plus their 1/2-crossings.
    Figure2 {
        /// Grid {1/S,..,(S-1)/S}.
        #[arg(long, default_value_t = 100)]
        steps: u32,
        /// Samples per Monte Carlo grid point.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Sample budget of each Monte Carlo crossing search.
        #[arg(long, default_value_t = 400_000)]
        budget: u64,
        /// Write the crossings CSV here; otherwise it goes to stderr.
        #[arg(long, value_name = "FILE")]
        crossings: Option<PathBuf>,
    },
    /// Threshold of a k-clique with a pendant path at every clique vertex,
    /// normalized by sqrt(k/n) and sqrt(k ln k / n).
    CliquePaths {
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,16")]
        k: Vec<usize>,
        /// Extra vertices on each pendant path.
        #[arg(long, default_value_t = 63)]
        len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Monte Carlo threshold and its normalized statistic across orders.
    Orders {
        /// path, cycle, wheel, complete or grid2.
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', default_value = "64,256,1024")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Mc,
}

enum Failure {
    Core(Error),
    Usage(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Core(Error::Io(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Core(Error::Json(e))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PRECONDITION)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_precondition() { EXIT_PRECONDITION } else { EXIT_IO })
        }
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot set thread count: {e}")))?;
    }
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    dispatch(cli.command, &mut out)?;
    out.flush()?;
    Ok(())
}

fn dispatch(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Gen(input) => writeln!(out, "{}", graph6::encode(&input.graph()?))?,
        Command::Zfs { command: ZfsCommand::Check { input, set } } => {
            let g = input.graph()?;
            let b = VertexSet::from_indices(g.n(), set.iter().copied())?;
            let record = closure(&g, &b);
            let report = json!({
                "graph6": graph6::encode(&g),
                "set": b,
                "zero_forcing": record.is_zero_forcing(),
                "record": record,
                "chains": record.maximal_forcing_chains(),
            });
            print_json(out, &report)?;
        }
        Command::Zfnum(input) => writeln!(out, "{}", zero_forcing_number(&input.graph()?)?)?,
        Command::Poly { input, max_n, rational, json } => poly(out, &input.graph()?, max_n, rational, json)?,
        Command::Prob { input, p, max_n, rational } => prob(out, &input.graph()?, &p, max_n, rational)?,
        Command::Mc { input, p, samples, seed, alpha, wilson } => {
            let g = input.graph()?;
            let mut rows = Vec::with_capacity(p.len());
            for p in p {
                let cfg = SampleConfig {
                    alpha,
                    interval: if wilson { IntervalKind::Wilson } else { IntervalKind::Hoeffding },
                    ..SampleConfig::new(p, samples, seed)
                };
                let est = mc_prob(&g, &cfg)?;
                rows.push(McRow {
                    p: est.p,
                    estimate: est.estimate,
                    ci_lo: est.ci_lo,
                    ci_hi: est.ci_hi,
                    samples: est.samples,
                    seed: est.seed,
                });
            }
            write_csv(out, &rows)?;
        }
        Command::Threshold { input, method, tol, budget, seed, max_n, json } => {
            let g = input.graph()?;
            let est = match method {
                Method::Exact => threshold_exact(&exact_curve_capped(&g, check_cap(max_n)?)?, tol)?,
                Method::Mc => {
                    let seed = seed.ok_or_else(|| Failure::Usage("--seed is required with --method mc".into()))?;
                    threshold_mc(&g, &McThresholdConfig::new(budget, seed, tol))?
                }
            };
            if json {
                print_json(out, &est)?;
            } else {
                let row = ThresholdRow {
                    p_hat: est.p_hat,
                    lo: est.interval.0,
                    hi: est.interval.1,
                    tolerance: est.tolerance,
                    evaluations: est.evaluations,
                    conclusive: est.conclusive,
                    seed: est.seed,
                };
                write_csv(out, &[row])?;
            }
        }
        Command::Core2 { input, set } => {
            let g = input.graph()?;
            let mut report = core_json(&g);
            if let Some(set) = set {
                let b = VertexSet::from_indices(g.n(), set)?;
                let proj = core_project_set(&g, &b);
                report["projected_set"] = json!(proj.projected_set);
                report["projected_zero_forcing"] = match &proj.core.core {
                    Some(core) => json!(zfl_core::is_zfs(core, &proj.projected_set)),
                    None => Value::Null,
                };
            }
            print_json(out, &report)?;
        }
        Command::Pendants(input) => {
            let g = input.graph()?;
            let report = json!({
                "graph6": graph6::encode(&g),
                "pendant_paths": leaf_walks(&g),
                "pendant_trees": pendant_trees(&g),
            });
            print_json(out, &report)?;
        }
        Command::Verify { claim, corpus, grid, seed, samples, reference, no_runtime } => {
            let corpus = Corpus::parse(&corpus)?;
            let grid = parse_grid(&grid)?;
            let mut report = match claim {
                Claim::PathCount => verify_count_dominance(&corpus, &reference)?,
                _ if reference != "path" => {
                    return Err(Failure::Usage("--reference applies only to path-count".into()));
                }
                _ => verify(claim, &corpus, &grid, seed, samples)?,
            };
            if no_runtime {
                report.runtime_secs = None;
            }
            print_json(out, &report)?;
            if !report.pass {
                out.flush()?;
                return Err(Failure::Counterexample);
            }
        }
        Command::Experiment { command } => experiment(out, command)?,
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct McRow {
    p: f64,
    estimate: f64,
    ci_lo: f64,
    ci_hi: f64,
    samples: u64,
    seed: u64,
}

#[derive(serde::Serialize)]
struct ThresholdRow {
    p_hat: f64,
    lo: f64,
    hi: f64,
    tolerance: f64,
    evaluations: u64,
    conclusive: bool,
    seed: Option<u64>,
}

fn check_cap(max_n: usize) -> Result<usize, Failure> {
    if max_n > ENUMERATION_HARD_CAP {
        return Err(Failure::Usage(format!("--max-n is limited to {ENUMERATION_HARD_CAP}")));
    }
    Ok(max_n)
}

fn poly(out: &mut impl Write, g: &Graph, max_n: usize, rational: bool, as_json: bool) -> Outcome {
    let poly = exact_curve_capped(g, check_cap(max_n)?)?.polynomial()?;
    let z: Vec<String> = poly.coeffs().iter().map(u128::to_string).collect();
    let basis: Vec<String> = poly.power_basis().iter().map(ToString::to_string).collect();
    if as_json {
        let mut report = json!({ "n": poly.n(), "z": z });
        if rational {
            report["power_basis"] = json!(basis);
        }
        print_json(out, &report)?;
    } else if rational {
        writeln!(out, "d,coefficient")?;
        for (d, c) in basis.iter().enumerate() {
            writeln!(out, "{d},{c}")?;
        }
    } else {
        writeln!(out, "k,z")?;
        for (k, c) in z.iter().enumerate() {
            writeln!(out, "{k},{c}")?;
        }
    }
    Ok(())
}

fn prob(out: &mut impl Write, g: &Graph, ps: &[String], max_n: usize, rational: bool) -> Outcome {
    let curve = exact_curve_capped(g, check_cap(max_n)?)?;
    if rational {
        let poly = curve.polynomial()?;
        let ps = ps.iter().map(|s| parse_probability(s)).collect::<Result<Vec<BigRational>, _>>()?;
        writeln!(out, "p,probability")?;
        for p in ps {
            writeln!(out, "{},{}", p, poly.prob_rational(&p))?;
        }
    } else {
        let mut parsed = Vec::with_capacity(ps.len());
        for s in ps {
            let p: f64 = s.parse().map_err(|_| Failure::Usage(format!("bad probability `{s}`")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidProbability(p).into());
            }
            parsed.push(p);
        }
        writeln!(out, "p,probability")?;
        for p in parsed {
            writeln!(out, "{p},{}", curve.eval(p))?;
        }
    }
    Ok(())
}

fn core_json(g: &Graph) -> Value {
    let core = two_core(g);
    json!({
        "graph6": core.core.as_ref().map(graph6::encode),
        "vertices": core.vertices,
    })
}

fn experiment(out: &mut impl Write, command: ExperimentCommand) -> Outcome {
    match command {
        ExperimentCommand::Figure2 { steps, samples, seed, budget, crossings } => {
            if steps < 2 {
                return Err(Failure::Usage("--steps must be at least 2".into()));
            }
            let cfg = Figure2Config {
                p_grid: p_grid(steps),
                samples,
                seed,
                crossing_budget: budget,
                ..Figure2Config::default()
            };
            let fig = experiment_figure2(&cfg)?;
            write_csv(&mut *out, &fig.curves)?;
            match crossings {
                Some(path) => write_csv(File::create(path)?, &fig.crossings)?,
                None => write_csv(io::stderr().lock(), &fig.crossings)?,
            }
        }
        ExperimentCommand::CliquePaths { k, len, budget, seed, tol } => {
            let cfg = CliqueConfig { k_list: k, path_len: len, budget, seed, tol };
            write_csv(out, &experiment_clique_paths(&cfg)?)?;
        }
        ExperimentCommand::Orders { family, n, budget, seed, tol } => {
            let cfg = OrdersConfig { family: OrderFamily::parse(&family)?, n_list: n, budget, seed, tol };
            write_csv(out, &experiment_threshold_orders(&cfg)?)?;
        }
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

impl Input {
    fn graph(&self) -> Result<Graph, Failure> {
        match self.input.as_slice() {
            [value] => guess_graph(value),
            [kind, value] => match kind.as_str() {
                "family" => Ok(zfl_core::family(value)?),
                "g6" => Ok(graph6::decode(value)?),
                "file" => graph_file(Path::new(value)),
                "edges" => edge_list(value.strip_prefix("edges:").unwrap_or(value)),
                _ => Err(Failure::Usage(format!("unknown input kind `{kind}`; use family, g6, file or edges"))),
            },
            _ => unreachable!("clap enforces one or two values"),
        }
    }
}

fn guess_graph(value: &str) -> Result<Graph, Failure> {
    if let Some(rest) = value.strip_prefix("edges:") {
        return edge_list(rest);
    }
    let path = Path::new(value);
    if path.is_file() {
        return graph_file(path);
    }
    if value.contains(':') {
        return Ok(value.parse::<Family>()?.build()?);
    }
    Ok(graph6::decode(value)?)
}

fn graph_file(path: &Path) -> Result<Graph, Failure> {
    let mut corpus = Corpus::from_graph6_file(path)?;
    match corpus.graphs.len() {
        1 => Ok(corpus.graphs.remove(0)),
        k => Err(Failure::Usage(format!("{} holds {k} graphs, expected exactly one", path.display()))),
    }
}

/// `N:u-v,u-v,..` with 0-based vertices; the edge list may be empty.
fn edge_list(spec: &str) -> Result<Graph, Failure> {
    let bad = || Failure::Usage(format!("bad edge list `{spec}`; expected N:u-v,.."));
    let (n, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut edges = Vec::new();
    for e in rest.split(',').filter(|e| !e.is_empty()) {
        let (u, v) = e.split_once('-').ok_or_else(bad)?;
        edges.push((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?));
    }
    Ok(Graph::from_edges(n, edges)?)
}
