//! `lvr`: command-line front end over the `vertex_ranking` library.
//!
//! Exit codes: 0 success / valid, 1 invalid colouring or inexact result,
//! 2 usage or input error.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vertex_ranking::exact::{exact_ranking_number, SearchLimits};
use vertex_ranking::generators::{generate, Family, GenSpec};
use vertex_ranking::graph::{degeneracy_order, power_graph};
use vertex_ranking::harness::{bench_scaling, bench_tail, write_csv, ExperimentConfig};
use vertex_ranking::io::{parse_colouring, read_edge_list, write_edge_list};
use vertex_ranking::paths::{enumerate_paths, PathLimits};
use vertex_ranking::ranking::{rank_bounded_degree, rank_degenerate};
use vertex_ranking::verify::{find_violations, report_json, write_report_text};
use vertex_ranking::{Error, Graph};

#[derive(Parser)]
#[command(name = "lvr", version, about = "l-vertex-rankings of degenerate graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Rank a graph and print the colouring as JSON.
    Rank {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Degeneracy bound; computed from the graph when omitted.
        #[arg(long)]
        d: Option<usize>,
        /// Use the bounded-degree algorithm with this degree cap instead of splitting.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a colouring and list its violations.
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact ranking number by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// Search-node budget.
        #[arg(long, default_value_t = 200_000_000)]
        budget: u64,
    },
    /// Generate an instance as an edge list.
    Gen {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Print the power graph G^ell as an edge list.
    Power {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
    },
    /// Dump every path with at most ell edges.
    Paths {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
    },
    /// Colour counts over a grid of n values, as CSV.
    BenchScaling(BenchArgs),
    /// Second-phase load per trial, as CSV.
    BenchTail(BenchArgs),
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, default_value = "random_d_degenerate")]
    family: String,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    ell: u64,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// First seed; trials use consecutive seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave the wall_ms column empty so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<Graph, Error> {
    read_edge_list(path).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Rank {
            graph,
            ell,
            d,
            delta,
            seed,
        } => {
            let g = load(&graph)?;
            let ell = ell as usize;
            let d = d.unwrap_or_else(|| degeneracy_order(&g).degeneracy);
            let result = match delta {
                Some(delta) => rank_bounded_degree(&g, ell, d, delta, seed),
                None => rank_degenerate(&g, ell, d, seed),
            };
            match result {
                Ok(r) => {
                    writeln!(out, "{}", r.to_json_string())?;
                    eprintln!("valid {}-ranking with {} colours", ell, r.total_colours());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ Error::VerificationFailed { .. }) => {
                    eprintln!("invalid: {e}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify {
            graph,
            colouring,
            ell,
            format,
        } => {
            let g = load(&graph)?;
            let col = parse_colouring(&std::fs::read_to_string(&colouring)?, g.n())?;
            let violations = find_violations(&g, ell as usize, &col)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report_json(ell as usize, &col, &violations))?
                )?,
                _ => write_report_text(&mut out, &col, &violations)?,
            }
            Ok(if violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Exact { graph, ell, budget } => {
            let g = load(&graph)?;
            let r = exact_ranking_number(&g, ell as usize, &SearchLimits { max_nodes: budget })?;
            writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            Ok(if r.exhaustive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen {
            family,
            n,
            d,
            delta,
            seed,
            cols,
        } => {
            let spec = GenSpec {
                family: family.parse()?,
                n,
                d,
                delta,
                seed,
                cols,
            };
            let g = generate(&spec)?;
            write_edge_list(&mut out, &g, Some(&spec.header()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Power { graph, ell } => {
            let g = load(&graph)?;
            let p = power_graph(&g, ell as usize)?;
            write_edge_list(&mut out, &p.graph, Some(&format!("power ell={ell}")))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Paths { graph, ell } => {
            let g = load(&graph)?;
            enumerate_paths(&g, ell as usize)?.write_dump(&mut out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::BenchScaling(args) => bench(args, true, &mut out),
        Command::BenchTail(args) => bench(args, false, &mut out),
    }
}

fn bench(args: BenchArgs, scaling: bool, out: &mut impl Write) -> Result<ExitCode, Error> {
    let family: Family = args.family.parse()?;
    let cfg = ExperimentConfig {
        family,
        ell: args.ell as usize,
        d: args.d,
        delta: args.delta,
        ns: args.n,
        trials: args.trials,
        base_seed: args.seed,
        timing: !args.no_timing,
        limits: PathLimits::from_env(),
    };
    let rows = if scaling { bench_scaling(&cfg)? } else { bench_tail(&cfg)? };
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        _ => write_csv(out, &rows)?,
    }
    Ok(ExitCode::SUCCESS)
}
