//! Hub labeling toolkit built around the reduction from Vertex Cover to
//! Optimal Hub Labeling.
//!
//! * [`graph`]: undirected graphs, hop distances, shortest-path membership.
//! * [`labeling`]: labelings, the coverage verifier, queries, a greedy baseline.
//! * [`solvers`]: exact hub-labeling and vertex-cover search plus oracles.
//! * [`reduction`]: the gadget construction, normalization and the certificate
//!   mappings in both directions.
//! * [`formats`]: the text file formats used by the `ohl` command line tool.
//! * [`cli`]: the `ohl` subcommands.

pub mod cli;
pub mod formats;
pub mod graph;
pub mod labeling;
pub mod reduction;
pub mod solvers;

pub use graph::{all_pairs_distances, Graph, VertexId};
pub use labeling::{verify, Labeling};
