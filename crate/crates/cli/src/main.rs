use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kalliance::bounds::{self, BoundContext, Target};
use kalliance::graph::edge_list;
use kalliance::graph::generators::Family;
use kalliance::harness::corpus::{run_corpus, CorpusSpec};
use kalliance::harness::paper_suite::run_paper_suite;
use kalliance::solver::oracle::brute_force_oracle;
use kalliance::solver::DEFAULT_MAX_N;
use kalliance::{Error, Graph, Parameter, SolveOptions, VertexSet};

const MAX_N_VAR: &str = "ALLIANCE_MAX_N";

#[derive(Parser)]
#[command(
    name = "kalliance",
    version,
    about = "Exact defensive k-alliance numbers, bounds and certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Order (complete, star, path, cycle, random_*).
        #[arg(long)]
        n: Option<usize>,
        /// Part sizes of a complete bipartite graph.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Hypercube dimension.
        #[arg(long)]
        d: Option<usize>,
        /// Edge probability for random_graph.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Compute one exact parameter.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_parameter)]
        target: Parameter,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Evaluate every applicable bound.
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_parameter)]
        target: Parameter,
        /// Treat the graph as planar.
        #[arg(long)]
        assume_planar: bool,
        /// Comma-separated vertices of a global defensive k-alliance to
        /// certify and evaluate set bounds for.
        #[arg(long)]
        set: Option<String>,
    },
    /// Certify a corpus and write one CSV row per (graph, k, target).
    Certify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Also write the full certification records as JSON.
        #[arg(long)]
        json: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Compare the solver with the brute-force oracle for every target.
    OracleCheck {
        #[arg(long)]
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        kmin: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        kmax: Option<i64>,
    },
    /// Check every published example value.
    PaperSuite,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Complete,
    CompleteBipartite,
    Star,
    Path,
    Cycle,
    Hypercube,
    Petersen,
    RandomTree,
    RandomGraph,
    RandomCubic,
}

fn parse_parameter(s: &str) -> Result<Parameter, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    File(String),
    /// Checks ran and something did not hold.
    Failed(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::File(_) => 3,
            Failure::Failed(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::File(e.to_string()),
            Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::Resource(_) | Error::Internal(_) => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::File(m) | Failure::Failed(m) => eprintln!("kalliance: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen {
            family,
            n,
            a,
            b,
            d,
            p,
            seed,
            output,
        } => {
            let family = build_family(family, n, a, b, d, p, seed)?;
            let g = family.generate()?;
            write_output(&output, &edge_list::to_edge_list(&g))
        }
        Command::Solve {
            graph,
            target,
            k,
            no_prune,
            workers,
        } => {
            let g = read_graph(&graph)?;
            if let Some(k) = k {
                warn_k_range(&g, k);
            }
            let opts = SolveOptions {
                use_pruning: !no_prune,
                workers: workers.max(1),
                max_n: max_n()?,
            };
            let result = kalliance::solve(&g, target, k, opts)?;
            print_json(&result)
        }
        Command::Bounds {
            graph,
            k,
            target,
            assume_planar,
            set,
        } => {
            let mut g = read_graph(&graph)?;
            if assume_planar {
                g = g.assert_planar()?;
            }
            warn_k_range(&g, k);
            let target = Target::try_from(target)?;
            let mut reports = bounds::evaluate_with(&g, k, target, &BoundContext::default())?;
            if let Some(list) = set {
                let s = parse_set(&g, &list)?;
                reports.extend(bounds::evaluate_for_set(&g, &s, k, assume_planar)?);
            }
            print_json(&reports)
        }
        Command::Certify {
            corpus,
            output,
            json,
            workers,
        } => {
            let text = fs::read_to_string(&corpus).map_err(|e| file_error(&corpus, e))?;
            let mut spec = CorpusSpec::from_toml(&text)?;
            spec.max_n = max_n_override()?.unwrap_or(spec.max_n);
            let outcome = run_corpus(&spec, workers)?;
            let mut csv = Vec::new();
            outcome.write_csv(&mut csv)?;
            write_output(&output, &String::from_utf8(csv).expect("csv is utf-8"))?;
            if let Some(path) = json {
                let text = serde_json::to_string(&outcome).expect("records serialize");
                write_output(&path, &(text + "\n"))?;
            }
            let errors: usize = outcome.records.iter().map(|r| r.errors.len()).sum();
            eprintln!(
                "certified {} rows, {} violations, {} solver errors",
                outcome.rows.len(),
                outcome.violation_count(),
                errors
            );
            for v in outcome.violations() {
                eprintln!("violation: {v}");
            }
            match outcome.violation_count() {
                0 => Ok(()),
                n => Err(Failure::Failed(format!("{n} violations"))),
            }
        }
        Command::OracleCheck { graph, kmin, kmax } => {
            let g = read_graph(&graph)?;
            let d1 = g.max_degree() as i64;
            let (lo, hi) = (kmin.unwrap_or(-d1), kmax.unwrap_or(d1));
            if lo > hi {
                return Err(Failure::Usage(format!("empty k range {lo}..={hi}")));
            }
            let opts = SolveOptions {
                max_n: max_n()?,
                ..SolveOptions::default()
            };
            let mut cases = Vec::new();
            for p in Parameter::ALL {
                if p.takes_k() {
                    cases.extend((lo..=hi).map(|k| (p, Some(k))));
                } else {
                    cases.push((p, None));
                }
            }
            let mut mismatches = Vec::new();
            for &(p, k) in &cases {
                let fast = kalliance::solve(&g, p, k, opts)?;
                let slow = brute_force_oracle(&g, p, k)?;
                if fast.value != slow.value || fast.witness != slow.witness {
                    mismatches.push(serde_json::json!({
                        "parameter": p,
                        "k": k,
                        "solver": fast,
                        "oracle": slow,
                    }));
                }
            }
            let failed = !mismatches.is_empty();
            print_json(&serde_json::json!({ "checked": cases.len(), "mismatches": mismatches }))?;
            if failed {
                return Err(Failure::Failed("solver and oracle disagree".to_string()));
            }
            Ok(())
        }
        Command::PaperSuite => {
            let checks = run_paper_suite();
            let mut out = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            write_output("-", &out)?;
            match failed {
                0 => Ok(()),
                n => Err(Failure::Failed(format!("{n} reference checks failed"))),
            }
        }
    }
}

fn build_family(
    name: FamilyName,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    d: Option<usize>,
    p: Option<f64>,
    seed: u64,
) -> Result<Family, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")));
    Ok(match name {
        FamilyName::Complete => Family::Complete { n: need(n, "n")? },
        FamilyName::CompleteBipartite => Family::CompleteBipartite {
            a: need(a, "a")?,
            b: need(b, "b")?,
        },
        FamilyName::Star => Family::Star { n: need(n, "n")? },
        FamilyName::Path => Family::Path { n: need(n, "n")? },
        FamilyName::Cycle => Family::Cycle { n: need(n, "n")? },
        FamilyName::Hypercube => Family::Hypercube { d: need(d, "d")? },
        FamilyName::Petersen => Family::Petersen,
        FamilyName::RandomTree => Family::RandomTree { n: need(n, "n")?, seed },
        FamilyName::RandomGraph => Family::RandomGraph {
            n: need(n, "n")?,
            p: p.ok_or_else(|| Failure::Usage("this family needs --p".to_string()))?,
            seed,
        },
        FamilyName::RandomCubic => Family::RandomCubic { n: need(n, "n")?, seed },
    })
}

fn max_n_override() -> Result<Option<usize>, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{MAX_N_VAR} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn max_n() -> Result<usize, Failure> {
    Ok(max_n_override()?.unwrap_or(DEFAULT_MAX_N))
}

fn warn_k_range(g: &Graph, k: i64) {
    let d1 = g.max_degree() as i64;
    if k < -d1 || k > d1 {
        eprintln!("kalliance: warning: k = {k} is outside -d_1..=d_1 = {}..={d1}", -d1);
    }
}

fn file_error(path: &Path, e: io::Error) -> Failure {
    Failure::File(format!("{}: {e}", path.display()))
}

fn read_graph(source: &str) -> Result<Graph, Failure> {
    let text = if source == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::File(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(source).map_err(|e| file_error(Path::new(source), e))?
    };
    edge_list::parse(&text).map_err(|e| Failure::File(format!("{source}: {e}")))
}

fn parse_set(g: &Graph, list: &str) -> Result<VertexSet, Failure> {
    let vertices = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad vertex `{s}` in --set")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexSet::from_vertices(g, vertices)?)
}

fn write_output(target: &str, text: &str) -> Outcome {
    if target == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| Failure::File(format!("stdout: {e}")))
    } else {
        fs::write(target, text).map_err(|e| file_error(Path::new(target), e))
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string(value).expect("report serializes");
    write_output("-", &(text + "\n"))
}
