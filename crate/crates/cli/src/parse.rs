//! Edge-list ingestion.
//!
//! Format: `#` starts a comment (whole-line or trailing), blank lines are
//! skipped, the first data line is the node count (which permits isolated
//! nodes), and every following line is one `u v` edge with whitespace-
//! separated integer labels. Labels are compacted to ids `0..n` in order of
//! first appearance; the original labels are kept for output.

use std::collections::HashMap;

use vital_edges::{EdgeId, Graph};

use crate::error::CliError;

/// A graph together with the node labels it was loaded under.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Original label of each node that appeared in the edge list; nodes
    /// beyond this list are isolated and unlabeled.
    pub labels: Vec<u64>,
}

impl LoadedGraph {
    /// Wraps a generated graph, labeling nodes by their own ids.
    pub fn generated(graph: Graph) -> Self {
        let labels = (0..graph.node_count() as u64).collect();
        LoadedGraph { graph, labels }
    }

    /// Renders an edge as `u-v` in original labels.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let (u, v) = self.graph.endpoints(e);
        format!("{}-{}", self.labels[u], self.labels[v])
    }
}

pub fn parse_edge_list(text: &str) -> Result<LoadedGraph, CliError> {
    let mut node_count: Option<usize> = None;
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_pairs: HashMap<(usize, usize), usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |message: String| CliError::Parse {
            line: line_no,
            message,
        };

        let Some(n) = node_count else {
            let n: usize = line
                .parse()
                .map_err(|_| fail(format!("expected a node count, got `{line}`")))?;
            if n == 0 {
                return Err(fail("node count must be at least 1".into()));
            }
            node_count = Some(n);
            continue;
        };

        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(fail(format!("expected `u v`, got `{line}`")));
        };
        let u: u64 = a
            .parse()
            .map_err(|_| fail(format!("`{a}` is not an integer node label")))?;
        let v: u64 = b
            .parse()
            .map_err(|_| fail(format!("`{b}` is not an integer node label")))?;
        if u == v {
            return Err(fail(format!("self-loop at node {u}")));
        }

        let mut intern = |label: u64| -> Result<usize, CliError> {
            if let Some(&id) = ids.get(&label) {
                return Ok(id);
            }
            let id = labels.len();
            if id >= n {
                return Err(CliError::Parse {
                    line: line_no,
                    message: format!(
                        "node label {label} is the {}th distinct label but the header declares {n} nodes",
                        id + 1
                    ),
                });
            }
            ids.insert(label, id);
            labels.push(label);
            Ok(id)
        };
        let ui = intern(u)?;
        let vi = intern(v)?;
        let key = (ui.min(vi), ui.max(vi));
        if let Some(first) = seen_pairs.insert(key, line_no) {
            return Err(fail(format!(
                "duplicate edge {u}-{v} (first declared on line {first})"
            )));
        }
        edges.push((ui, vi));
    }

    let Some(n) = node_count else {
        return Err(CliError::Invalid("edge list contains no node count".into()));
    };
    let graph = Graph::new(n, edges)?;
    Ok(LoadedGraph { graph, labels })
}
