//! Strategy sweeps over removal budgets, and their CSV serialization.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vital_edges::{beas_select, robustness_after_removal, run_ma, EdgeId, MAParams};

use crate::error::CliError;
use crate::parse::LoadedGraph;

/// Edge-removal strategies a sweep can compare. `Oracle` rows are produced by
/// the `oracle` subcommand, never by a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Strategy {
    Beas,
    Ma,
    Oracle,
    Random,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Beas => "beas",
            Strategy::Ma => "ma",
            Strategy::Oracle => "oracle",
            Strategy::Random => "random",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "ma" => Ok(Strategy::Ma),
            "beas" => Ok(Strategy::Beas),
            "random" => Ok(Strategy::Random),
            other => Err(CliError::Invalid(format!(
                "unknown strategy `{other}` (expected ma, beas or random)"
            ))),
        }
    }
}

/// Optional overrides of the stock memetic parameters.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaOverrides {
    pub generations: Option<usize>,
    pub population: Option<usize>,
    pub crossover_prob: Option<f64>,
    pub local_search_prob: Option<f64>,
    pub mu: Option<f64>,
}

impl MaOverrides {
    /// Stock parameters for `cost`, overridden where set, seeded per replicate.
    pub fn resolve(&self, cost: usize, seed: u64) -> MAParams {
        let mut p = MAParams::for_cost(cost);
        p.seed = seed;
        if let Some(g) = self.generations {
            p.generations = g;
        }
        if let Some(x) = self.population {
            p.population_size = x;
        }
        if let Some(pc) = self.crossover_prob {
            p.crossover_prob = pc;
        }
        if let Some(pl) = self.local_search_prob {
            p.local_search_prob = pl;
        }
        if let Some(mu) = self.mu {
            p.mu = mu;
        }
        p
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub strategies: Vec<Strategy>,
    pub costs: Vec<usize>,
    /// Replicate seeds for the seeded strategies (ma, random).
    pub seeds: Vec<u64>,
    pub ma: MaOverrides,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub strategy: Strategy,
    pub cost: usize,
    pub seed: u64,
    pub r: f64,
    pub walltime_ms: u64,
    /// Removed edges; removal order for beas, ascending edge id otherwise.
    pub removed: Vec<EdgeId>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

/// Runs every (strategy, cost, seed) cell and returns the rows sorted by
/// (strategy, cost, seed). beas is deterministic, so it gets a single row
/// per cost with seed 0; a cost of 0 reports the intact network's R.
pub fn run_sweep(lg: &LoadedGraph, cfg: &SweepConfig) -> Result<SweepResult, CliError> {
    let g = &lg.graph;
    let m = g.edge_count();
    if cfg.strategies.is_empty() {
        return Err(CliError::Invalid("no strategies selected".into()));
    }
    if cfg.seeds.is_empty() {
        return Err(CliError::Invalid("no replicate seeds given".into()));
    }
    if cfg.strategies.contains(&Strategy::Oracle) {
        return Err(CliError::Invalid("oracle is not a sweep strategy".into()));
    }
    if let Some(&c) = cfg.costs.iter().find(|&&c| c > m) {
        return Err(CliError::Invalid(format!(
            "cost {c} exceeds edge count {m}"
        )));
    }

    let mut rows = Vec::new();
    for &strategy in &cfg.strategies {
        for &cost in &cfg.costs {
            match strategy {
                Strategy::Beas => {
                    let start = Instant::now();
                    let order = beas_select(g, cost)?;
                    let r = robustness_after_removal(g, &order)?;
                    rows.push(SweepRow {
                        strategy,
                        cost,
                        seed: 0,
                        r,
                        walltime_ms: start.elapsed().as_millis() as u64,
                        removed: order,
                    });
                }
                Strategy::Ma => {
                    for &seed in &cfg.seeds {
                        let params = cfg.ma.resolve(cost, seed);
                        let start = Instant::now();
                        let report = run_ma(g, &params)?;
                        rows.push(SweepRow {
                            strategy,
                            cost,
                            seed,
                            r: report.best_r,
                            walltime_ms: start.elapsed().as_millis() as u64,
                            removed: report.best.removed().to_vec(),
                        });
                    }
                }
                Strategy::Random => {
                    for &seed in &cfg.seeds {
                        let start = Instant::now();
                        let mut rng = ChaCha8Rng::seed_from_u64(seed);
                        let mut picks =
                            rand::seq::index::sample(&mut rng, m, cost).into_vec();
                        picks.sort_unstable();
                        let r = robustness_after_removal(g, &picks)?;
                        rows.push(SweepRow {
                            strategy,
                            cost,
                            seed,
                            r,
                            walltime_ms: start.elapsed().as_millis() as u64,
                            removed: picks,
                        });
                    }
                }
                Strategy::Oracle => unreachable!("rejected above"),
            }
        }
    }
    rows.sort_by(|a, b| {
        (a.strategy, a.cost, a.seed).cmp(&(b.strategy, b.cost, b.seed))
    });
    Ok(SweepResult { rows })
}

pub const CSV_HEADER: &str = "strategy,cost,seed,R,walltime_ms,edges";

/// Renders the result as CSV: six decimal places for R, edges as
/// semicolon-separated `u-v` pairs in original node labels.
pub fn format_csv(lg: &LoadedGraph, res: &SweepResult) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &res.rows {
        let edges = row
            .removed
            .iter()
            .map(|&e| lg.edge_label(e))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{:.6},{},{}\n",
            row.strategy, row.cost, row.seed, row.r, row.walltime_ms, edges
        ));
    }
    out
}

pub fn write_csv(lg: &LoadedGraph, res: &SweepResult, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, format_csv(lg, res)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
