//! Edge betweenness and the adaptive highest-betweenness removal baseline.
//!
//! For each unordered node pair {j,k} in the same component, every shortest
//! j-k path distributes one unit of weight over its edges in proportion to
//! the share of shortest paths using each edge; pairs in different components
//! contribute nothing. Scores are exact: a single-source accumulation pass is
//! run from every node (no sampling), and the ordered double-counting is
//! halved at the end.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Exact edge betweenness, indexed by edge id.
pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    edge_betweenness_masked(g, &vec![false; g.edge_count()])
}

/// Edge betweenness of the subgraph with masked edges deleted.
/// Masked edges score 0.
pub(crate) fn edge_betweenness_masked(g: &Graph, removed: &[bool]) -> Vec<f64> {
    let n = g.node_count();
    let m = g.edge_count();
    let mut scores = vec![0.0f64; m];

    let mut dist = vec![-1i64; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    for source in 0..n {
        dist.iter_mut().for_each(|d| *d = -1);
        sigma.iter_mut().for_each(|s| *s = 0.0);
        delta.iter_mut().for_each(|d| *d = 0.0);
        stack.clear();

        dist[source] = 0;
        sigma[source] = 1.0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &(u, e) in g.neighbors(v) {
                if removed[e] {
                    continue;
                }
                if dist[u] < 0 {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
                if dist[u] == dist[v] + 1 {
                    sigma[u] += sigma[v];
                }
            }
        }

        // Walk back down the BFS order; each edge on the shortest-path DAG
        // carries its share of the paths ending at or passing through the
        // deeper endpoint.
        for &w in stack.iter().rev() {
            for &(u, e) in g.neighbors(w) {
                if removed[e] || dist[u] != dist[w] - 1 {
                    continue;
                }
                let c = sigma[u] / sigma[w] * (1.0 + delta[w]);
                scores[e] += c;
                delta[u] += c;
            }
        }
    }

    // Each unordered pair was counted from both endpoints.
    for s in &mut scores {
        *s /= 2.0;
    }
    scores
}

/// Adaptive highest-edge-betweenness selection: `cost` times, recompute
/// betweenness on the residual graph and delete one maximum-score edge
/// (ties broken toward the lowest edge id). Returns the removal order as
/// edge ids of `g`.
///
/// The result for a smaller `cost` is always a prefix of the result for a
/// larger one, since each step depends only on the residual graph.
pub fn beas_select(g: &Graph, cost: usize) -> Result<Vec<EdgeId>> {
    let m = g.edge_count();
    if cost > m {
        return Err(Error::InvalidParam(format!(
            "cost {cost} exceeds edge count {m}"
        )));
    }
    let mut removed = vec![false; m];
    let mut order = Vec::with_capacity(cost);
    for _ in 0..cost {
        let scores = edge_betweenness_masked(g, &removed);
        let best = (0..m)
            .filter(|&e| !removed[e])
            .max_by(|&a, &b| {
                scores[a]
                    .partial_cmp(&scores[b])
                    .expect("betweenness scores are finite")
                    // prefer the lower edge id on ties
                    .then(b.cmp(&a))
            })
            .expect("cost <= m leaves at least one live edge");
        removed[best] = true;
        order.push(best);
    }
    Ok(order)
}
