//! Find the edges that matter most for a network's attack resistance.
//!
//! The library measures robustness as the mean giant-component fraction over
//! a full degree-adaptive node-removal attack, and searches for the set of
//! `C` edges whose deletion minimizes that measure — the network's vital
//! edges. A memetic algorithm does the searching; adaptive highest-edge-
//! betweenness removal is provided as the classical baseline it is judged
//! against, and a Barabási–Albert generator supplies benchmark graphs.

pub mod attack;
pub mod centrality;
mod dsu;
pub mod error;
pub mod evolver;
pub mod graph;
pub mod netgen;

pub use attack::{degree_adaptive_attack, robustness, robustness_after_removal, AttackTrace};
pub use centrality::{beas_select, edge_betweenness};
pub use error::{Error, Result};
pub use evolver::{run_ma, Individual, MAParams, RunReport};
pub use graph::{giant_component_size, EdgeId, Graph, NodeId};
pub use netgen::{ba_network, fixture, BAParams};
