//! Shared helpers for the integration and acceptance suites: seeded random
//! graphs and an independent betweenness reference that enumerates every
//! shortest path explicitly.

// each test binary compiles this module separately and uses a subset of it
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vital_edges::{EdgeId, Graph, NodeId};

/// Seeded connected graph: a random spanning tree on `n_lo..=n_hi` nodes plus
/// random extra edges, capped at `max_m` edges total.
pub fn random_connected_graph(seed: u64, n_lo: usize, n_hi: usize, max_m: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(n_lo..=n_hi);
    let mut edges: HashSet<(NodeId, NodeId)> = HashSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    let all_pairs = n * (n - 1) / 2;
    let budget = max_m.min(all_pairs).saturating_sub(edges.len());
    let extras = rng.gen_range(0..=budget);
    let mut added = 0;
    let mut attempts = 0;
    while added < extras && attempts < 50 * extras + 50 {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && edges.insert((u.min(v), u.max(v))) {
            added += 1;
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    Graph::new(n, list).unwrap()
}

/// Seeded random tree on `n_lo..=n_hi` nodes.
pub fn random_tree(seed: u64, n_lo: usize, n_hi: usize) -> Graph {
    random_connected_graph(seed, n_lo, n_hi, 0)
}

/// Seeded connected graph with sparse-network density: a spanning tree plus
/// `extra_lo..=extra_hi` additional edges, like the infrastructure graphs the
/// search targets (edge/node ratio around 1.2 to 1.7).
pub fn random_sparse_connected_graph(
    seed: u64,
    n_lo: usize,
    n_hi: usize,
    extra_lo: usize,
    extra_hi: usize,
) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(n_lo..=n_hi);
    let mut edges: HashSet<(NodeId, NodeId)> = HashSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    let extras = rng.gen_range(extra_lo..=extra_hi).min(n * (n - 1) / 2 - edges.len());
    let mut added = 0;
    while added < extras {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && edges.insert((u.min(v), u.max(v))) {
            added += 1;
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    Graph::new(n, list).unwrap()
}

/// Hop distances from `source`; `usize::MAX` marks unreachable nodes.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Brute-force edge betweenness: for every connected unordered pair, list
/// every shortest path by backtracking down the BFS distance field, then
/// credit each edge with its share of the pair's paths.
pub fn betweenness_by_path_enumeration(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut scores = vec![0.0f64; g.edge_count()];
    for j in 0..n {
        let dist = bfs_distances(g, j);
        for k in (j + 1)..n {
            if dist[k] == usize::MAX {
                continue;
            }
            let mut paths: Vec<Vec<EdgeId>> = Vec::new();
            let mut current: Vec<EdgeId> = Vec::new();
            collect_paths(g, &dist, j, k, &mut current, &mut paths);
            let total = paths.len() as f64;
            let mut uses: HashMap<EdgeId, usize> = HashMap::new();
            for path in &paths {
                for &e in path {
                    *uses.entry(e).or_default() += 1;
                }
            }
            for (e, count) in uses {
                scores[e] += count as f64 / total;
            }
        }
    }
    scores
}

/// Walks from `node` back toward the BFS source, recording the edge stack of
/// every distance-decreasing route.
fn collect_paths(
    g: &Graph,
    dist: &[usize],
    source: NodeId,
    node: NodeId,
    current: &mut Vec<EdgeId>,
    paths: &mut Vec<Vec<EdgeId>>,
) {
    if node == source {
        paths.push(current.clone());
        return;
    }
    for &(u, e) in g.neighbors(node) {
        if dist[u] + 1 == dist[node] {
            current.push(e);
            collect_paths(g, dist, source, u, current, paths);
            current.pop();
        }
    }
}
