//! Synthetic Internet AS-level topologies and the metrics used to compare
//! them with measured ones.
//!
//! * [`graph`]: the immutable simple graph every other module works on.
//! * [`generators`]: Waxman, BA, GLP, Inet and PFP, all seeded and
//!   deterministic.
//! * [`metrics`]: degree/JDD, assortativity, clustering, rich-club, hop
//!   distribution, betweenness/closeness, coreness, clique number and the
//!   normalized Laplacian spectrum.
//! * [`datasets`]: edge-list and timestamped edge-list parsing.
//! * [`harness`]: size-matched comparison runs and report files.

pub mod datasets;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod metrics;

pub use error::{ConfigError, DatasetError, GraphError, HarnessError, MetricError};
pub use generators::{ModelConfig, ModelKind, Seed};
pub use graph::{BuildStats, ComponentPartition, DedupPolicy, Graph};
