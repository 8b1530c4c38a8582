//! Cross-cutting properties of sweeps and their CSV form.

mod common;

use common::random_connected_graph;
use vital_edges::{ba_network, robustness_after_removal, BAParams, EdgeId};
use vital_edges_cli::sweep::{format_csv, MaOverrides, CSV_HEADER};
use vital_edges_cli::{
    brute_force_vital_edges, parse_edge_list, run_sweep, LoadedGraph, Strategy, SweepConfig,
    DEFAULT_ENUMERATION_CAP,
};

fn all_strategies(costs: Vec<usize>, seeds: Vec<u64>, generations: usize) -> SweepConfig {
    SweepConfig {
        strategies: vec![Strategy::Ma, Strategy::Beas, Strategy::Random],
        costs,
        seeds,
        ma: MaOverrides {
            generations: Some(generations),
            ..Default::default()
        },
    }
}

/// Maps a printed `u-v` label pair back to the edge id of the loaded graph.
fn edge_id_by_label(lg: &LoadedGraph, label: &str) -> EdgeId {
    let (a, b) = label.split_once('-').unwrap();
    let a: u64 = a.parse().unwrap();
    let b: u64 = b.parse().unwrap();
    let pos = |l: u64| lg.labels.iter().position(|&x| x == l).unwrap();
    let (u, v) = (pos(a), pos(b));
    let key = (u.min(v), u.max(v));
    lg.graph
        .edges()
        .iter()
        .position(|&e| e == key)
        .unwrap_or_else(|| panic!("no edge {label}"))
}

/// Re-derives every row's R from its printed edge list; the reprint must
/// match the printed R column exactly.
fn assert_csv_round_trips(lg: &LoadedGraph, csv: &str) {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    for line in lines {
        let fields: Vec<&str> = line.splitn(6, ',').collect();
        let printed_r = fields[3];
        let ids: Vec<EdgeId> = if fields[5].is_empty() {
            Vec::new()
        } else {
            fields[5]
                .split(';')
                .map(|label| edge_id_by_label(lg, label))
                .collect()
        };
        let recomputed = robustness_after_removal(&lg.graph, &ids).unwrap();
        assert_eq!(
            format!("{recomputed:.6}"),
            printed_r,
            "row `{line}` does not round-trip"
        );
    }
}

#[test]
fn csv_round_trips_on_a_generated_graph() {
    let lg = LoadedGraph::generated(ba_network(&BAParams { n_final: 40, m: 2, m0: 2, seed: 1 }).unwrap());
    let cfg = all_strategies(vec![0, 3, 8], vec![0, 1], 25);
    let res = run_sweep(&lg, &cfg).unwrap();
    assert_csv_round_trips(&lg, &format_csv(&lg, &res));
}

#[test]
fn csv_round_trips_under_renamed_labels() {
    // labels that are neither compact nor ordered
    let lg = parse_edge_list("5\n30 10\n10 77\n77 30\n77 41\n").unwrap();
    let cfg = all_strategies(vec![1, 2], vec![4], 10);
    let res = run_sweep(&lg, &cfg).unwrap();
    assert_csv_round_trips(&lg, &format_csv(&lg, &res));
}

#[test]
fn oracle_lower_bounds_every_strategy() {
    let lg = LoadedGraph::generated(random_connected_graph(42, 8, 12, 20));
    let cfg = all_strategies(vec![1, 2], vec![0, 1, 2], 40);
    let res = run_sweep(&lg, &cfg).unwrap();
    for &cost in &cfg.costs {
        let (_, optimum) =
            brute_force_vital_edges(&lg.graph, cost, DEFAULT_ENUMERATION_CAP).unwrap();
        for row in res.rows.iter().filter(|r| r.cost == cost) {
            assert!(
                row.r >= optimum - 1e-12,
                "{} at cost {cost} undercuts the exact optimum: {} < {optimum}",
                row.strategy,
                row.r
            );
        }
    }
}

#[test]
fn ma_beats_beas_and_the_random_median() {
    let lg = LoadedGraph::generated(ba_network(&BAParams { n_final: 30, m: 2, m0: 2, seed: 7 }).unwrap());
    assert!(lg.graph.edge_count() >= 20);
    let cfg = all_strategies(vec![3, 6], vec![0, 1, 2, 3, 4], 60);
    let res = run_sweep(&lg, &cfg).unwrap();
    for &cost in &cfg.costs {
        let rs = |s: Strategy| -> Vec<f64> {
            res.rows
                .iter()
                .filter(|r| r.strategy == s && r.cost == cost)
                .map(|r| r.r)
                .collect()
        };
        let best_ma = rs(Strategy::Ma).into_iter().fold(f64::INFINITY, f64::min);
        let beas = rs(Strategy::Beas)[0];
        let mut random = rs(Strategy::Random);
        random.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median_random = random[random.len() / 2];
        assert!(
            best_ma <= beas,
            "cost {cost}: best MA {best_ma} > beas {beas}"
        );
        assert!(
            best_ma <= median_random,
            "cost {cost}: best MA {best_ma} > random median {median_random}"
        );
    }
}
