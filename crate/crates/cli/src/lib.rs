//! Library half of the benchmark CLI: edge-list ingestion, the exhaustive
//! vital-edge oracle, strategy sweeps and CSV emission.

pub mod config;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod sweep;

pub use error::CliError;
pub use oracle::{brute_force_vital_edges, DEFAULT_ENUMERATION_CAP};
pub use parse::{parse_edge_list, LoadedGraph};
pub use sweep::{run_sweep, write_csv, Strategy, SweepConfig, SweepResult, SweepRow};
