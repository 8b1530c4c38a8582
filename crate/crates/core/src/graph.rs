//! Immutable undirected simple graphs.
//!
//! Nodes are `0..n`. Edges are canonicalized as `(min, max)` pairs and
//! identified by their index in the edge list; that index is stable for the
//! lifetime of the graph and is what every other module (attack, betweenness,
//! the evolver) uses to refer to an edge.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;

/// An undirected simple graph: no self-loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
    /// Per-node list of (neighbor, edge id), in edge-insertion order.
    adj: Vec<Vec<(NodeId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from a node count and an edge list.
    ///
    /// Edges are stored canonicalized (`u < v`) in the order given; inputs
    /// containing self-loops, duplicate edges or out-of-range endpoints are
    /// rejected rather than silently cleaned.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut canonical = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::NodeOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(Error::NodeOutOfRange { id: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            canonical.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in canonical.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges: canonical,
            adj,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonicalized edge list; the position of a pair is its edge id.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Endpoints of edge `e` as a `(min, max)` pair.
    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        self.edges[e]
    }

    /// Neighbors of `v` as (neighbor, edge id) pairs.
    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    /// Returns a new graph with the same node set and the listed edges absent.
    ///
    /// Surviving edges keep their relative order, so the new graph's edge `i`
    /// is the `i`-th original edge not in `edge_ids`. The receiver is
    /// unchanged.
    pub fn remove_edges(&self, edge_ids: &[EdgeId]) -> Result<Graph> {
        let mask = self.edge_mask(edge_ids)?;
        let kept = self
            .edges
            .iter()
            .zip(&mask)
            .filter(|(_, &removed)| !removed)
            .map(|(&e, _)| e);
        Graph::new(self.n, kept)
    }

    /// Validates `edge_ids` (in range, no duplicates) and returns a
    /// per-edge removal mask.
    pub(crate) fn edge_mask(&self, edge_ids: &[EdgeId]) -> Result<Vec<bool>> {
        let m = self.edges.len();
        let mut mask = vec![false; m];
        for &id in edge_ids {
            if id >= m {
                return Err(Error::EdgeOutOfRange { id, m });
            }
            if mask[id] {
                return Err(Error::DuplicateEdgeId(id));
            }
            mask[id] = true;
        }
        Ok(mask)
    }
}

/// Node count of the largest connected component among non-removed nodes.
///
/// `removed` is a per-node mask of length `n`; returns 0 when every node is
/// removed.
pub fn giant_component_size(g: &Graph, removed: &[bool]) -> usize {
    assert_eq!(removed.len(), g.n, "mask length must equal node count");
    let mut visited = removed.to_vec();
    let mut best = 0;
    let mut queue = Vec::new();
    for start in 0..g.n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        queue.push(start);
        let mut size = 0;
        while let Some(v) = queue.pop() {
            size += 1;
            for &(u, _) in g.neighbors(v) {
                if !visited[u] {
                    visited[u] = true;
                    queue.push(u);
                }
            }
        }
        best = best.max(size);
    }
    best
}
