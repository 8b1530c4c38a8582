//! Benchmark driver for vital-edge identification.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use vital_edges::{ba_network, edge_betweenness, BAParams};
use vital_edges_cli::config::parse_config;
use vital_edges_cli::sweep::{format_csv, MaOverrides};
use vital_edges_cli::{
    brute_force_vital_edges, parse_edge_list, run_sweep, write_csv, CliError, LoadedGraph,
    Strategy, SweepConfig, SweepResult, SweepRow, DEFAULT_ENUMERATION_CAP,
};

#[derive(Parser)]
#[command(
    name = "vital-edges",
    version,
    about = "Identify and benchmark the most vital edges of an undirected network"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare removal strategies over a list of budgets and emit CSV
    Sweep(SweepArgs),
    /// Exhaustively find the optimal removal set per budget (small graphs)
    Oracle(OracleArgs),
    /// Print the exact edge betweenness of every edge
    Betweenness(BetweennessArgs),
    /// Generate a preferential-attachment benchmark graph as an edge list
    GenBa(GenBaArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file: node count first, then one `u v` pair per line
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
    /// Generate a Barabási–Albert graph instead: `n,m,m0`
    #[arg(long, value_name = "N,M,M0", conflicts_with = "graph")]
    ba: Option<String>,
    /// Seed for --ba generation
    #[arg(long, value_name = "SEED")]
    graph_seed: Option<u64>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Removal budgets, e.g. `0,50,100`
    #[arg(long, value_name = "LIST")]
    cost: Option<String>,
    /// Subset of `ma,beas,random`
    #[arg(long, value_name = "LIST")]
    strategies: Option<String>,
    /// Replicate seeds for ma and random
    #[arg(long, value_name = "LIST")]
    seeds: Option<String>,
    /// Memetic generations (default 500)
    #[arg(long)]
    generations: Option<usize>,
    /// Memetic population size (default 20)
    #[arg(long)]
    pop: Option<usize>,
    /// Crossover probability (default 0.8)
    #[arg(long)]
    pc: Option<f64>,
    /// Local-search probability (default min(1, 5/cost))
    #[arg(long)]
    pl: Option<f64>,
    /// Local-search acceptance weight (default 0.7)
    #[arg(long)]
    mu: Option<f64>,
    /// Output CSV path (stdout when absent)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// `key=value` defaults; command-line flags take precedence
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Removal budgets, e.g. `1,2,3`
    #[arg(long, value_name = "LIST")]
    cost: Option<String>,
    /// Maximum number of subsets to enumerate
    #[arg(long)]
    cap: Option<u128>,
    /// Output CSV path (stdout when absent)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct BetweennessArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Output CSV path (stdout when absent)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct GenBaArgs {
    /// Generator parameters: `n,m,m0`
    #[arg(long, value_name = "N,M,M0")]
    ba: Option<String>,
    /// Generator seed
    #[arg(long)]
    seed: Option<u64>,
    /// Output edge-list path (stdout when absent)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Sweep(args) => sweep_cmd(args),
        Command::Oracle(args) => oracle_cmd(args),
        Command::Betweenness(args) => betweenness_cmd(args),
        Command::GenBa(args) => gen_ba_cmd(args),
    }
}

fn sweep_cmd(args: SweepArgs) -> Result<(), CliError> {
    let cfg_map = load_config(args.config.as_deref())?;
    let lg = resolve_graph(&args.graph, &cfg_map)?;
    let costs = parse_list::<usize>(&require(
        merged(args.cost, &cfg_map, "cost")?,
        "--cost",
    )?)?;
    let strategies = match merged(args.strategies, &cfg_map, "strategies")? {
        Some(list) => parse_list::<Strategy>(&list)?,
        None => vec![Strategy::Ma, Strategy::Beas, Strategy::Random],
    };
    let seeds = match merged(args.seeds, &cfg_map, "seeds")? {
        Some(list) => parse_list::<u64>(&list)?,
        None => vec![0],
    };
    let config = SweepConfig {
        strategies,
        costs,
        seeds,
        ma: MaOverrides {
            generations: merged(args.generations, &cfg_map, "generations")?,
            population: merged(args.pop, &cfg_map, "pop")?,
            crossover_prob: merged(args.pc, &cfg_map, "pc")?,
            local_search_prob: merged(args.pl, &cfg_map, "pl")?,
            mu: merged(args.mu, &cfg_map, "mu")?,
        },
    };
    let result = run_sweep(&lg, &config)?;
    emit_csv(&lg, &result, merged(args.out, &cfg_map, "out")?.as_deref())
}

fn oracle_cmd(args: OracleArgs) -> Result<(), CliError> {
    let cfg_map = load_config(args.config.as_deref())?;
    let lg = resolve_graph(&args.graph, &cfg_map)?;
    let costs = parse_list::<usize>(&require(
        merged(args.cost, &cfg_map, "cost")?,
        "--cost",
    )?)?;
    let cap = merged(args.cap, &cfg_map, "cap")?.unwrap_or(DEFAULT_ENUMERATION_CAP);

    let mut rows = Vec::new();
    for cost in costs {
        let start = Instant::now();
        let (removed, r) = brute_force_vital_edges(&lg.graph, cost, cap)?;
        rows.push(SweepRow {
            strategy: Strategy::Oracle,
            cost,
            seed: 0,
            r,
            walltime_ms: start.elapsed().as_millis() as u64,
            removed,
        });
    }
    emit_csv(
        &lg,
        &SweepResult { rows },
        merged(args.out, &cfg_map, "out")?.as_deref(),
    )
}

fn betweenness_cmd(args: BetweennessArgs) -> Result<(), CliError> {
    let cfg_map = load_config(args.config.as_deref())?;
    let lg = resolve_graph(&args.graph, &cfg_map)?;
    let scores = edge_betweenness(&lg.graph);
    let mut out = String::from("edge,u,v,betweenness\n");
    for (e, score) in scores.iter().enumerate() {
        let (u, v) = lg.graph.endpoints(e);
        out.push_str(&format!(
            "{},{},{},{:.6}\n",
            e, lg.labels[u], lg.labels[v], score
        ));
    }
    emit_text(&out, merged(args.out, &cfg_map, "out")?.as_deref())
}

fn gen_ba_cmd(args: GenBaArgs) -> Result<(), CliError> {
    let cfg_map = load_config(args.config.as_deref())?;
    let triple = require(merged(args.ba, &cfg_map, "ba")?, "--ba")?;
    let seed = merged(args.seed, &cfg_map, "seed")?.unwrap_or(0);
    let g = ba_network(&ba_params(&triple, seed)?)?;

    let mut out = format!("{}\n", g.node_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    emit_text(&out, merged(args.out, &cfg_map, "out")?.as_deref())
}

fn load_config(path: Option<&Path>) -> Result<HashMap<String, String>, CliError> {
    match path {
        Some(p) => parse_config(&read_file(p)?),
        None => Ok(HashMap::new()),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// The flag value when given, otherwise the config-file value under `key`.
fn merged<T: FromStr>(
    flag: Option<T>,
    cfg: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    cfg.get(key)
        .map(|raw| {
            raw.parse::<T>()
                .map_err(|_| CliError::Invalid(format!("config key `{key}`: bad value `{raw}`")))
        })
        .transpose()
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Invalid(format!("{flag} is required")))
}

fn parse_list<T: FromStr>(list: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    list.split(',')
        .map(|item| {
            let item = item.trim();
            T::from_str(item).map_err(|e| CliError::Invalid(format!("bad list item `{item}`: {e}")))
        })
        .collect()
}

fn ba_params(triple: &str, seed: u64) -> Result<BAParams, CliError> {
    let parts = parse_list::<usize>(triple)?;
    let [n_final, m, m0] = parts[..] else {
        return Err(CliError::Invalid(format!(
            "--ba expects `n,m,m0`, got `{triple}`"
        )));
    };
    Ok(BAParams {
        n_final,
        m,
        m0,
        seed,
    })
}

fn resolve_graph(
    args: &GraphArgs,
    cfg: &HashMap<String, String>,
) -> Result<LoadedGraph, CliError> {
    let path = merged(args.graph.clone(), cfg, "graph")?;
    let ba = merged(args.ba.clone(), cfg, "ba")?;
    let seed = merged(args.graph_seed, cfg, "graph-seed")?.unwrap_or(0);
    match (path, ba) {
        (Some(p), None) => parse_edge_list(&read_file(&p)?),
        (None, Some(triple)) => Ok(LoadedGraph::generated(ba_network(&ba_params(
            &triple, seed,
        )?)?)),
        (None, None) => Err(CliError::Invalid(
            "a graph source is required: --graph PATH or --ba n,m,m0".into(),
        )),
        (Some(_), Some(_)) => Err(CliError::Invalid(
            "--graph and --ba are mutually exclusive".into(),
        )),
    }
}

fn emit_csv(lg: &LoadedGraph, res: &SweepResult, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => write_csv(lg, res, path),
        None => {
            print!("{}", format_csv(lg, res));
            Ok(())
        }
    }
}

fn emit_text(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
