//! Bicircular matroids and their double circuits.
//!
//! The crate is organised bottom-up:
//!
//! * [`multigraph`]: labeled multigraphs with loops and parallel edges,
//!   plus the subgraph queries (components, girth, branch vertices,
//!   subdivision classes) used by the structural checks.
//! * [`bicircular`]: the rank function of `B(G)`.
//! * [`matroid`]: a generic rank-oracle matroid with duals, minors, closure,
//!   colines and double circuits with their partitions.
//! * [`double_circuit`]: two enumerators for the double circuits of `B(G)`
//!   and per-double-circuit analysis.
//! * [`generators`]: named graphs and seeded random graphs.
//! * [`verify`]: the per-graph analysis report and the fixed claim suite.

pub mod bicircular;
pub mod double_circuit;
pub mod edgeset;
pub mod error;
pub mod format;
pub mod generators;
pub mod matroid;
pub mod multigraph;
pub mod verify;

pub use bicircular::BicircularContext;
pub use double_circuit::{DoubleCircuitCensus, Enumerator};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use matroid::{ColineReport, DoubleCircuitReport, Matroid, Provenance, RankOracle};
pub use multigraph::{Girth, Multigraph};
