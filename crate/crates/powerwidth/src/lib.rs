//! Toolkit for graph powers and clique-width at desk scale: exact
//! small-graph clique-width and NLC-width, modular and twin structure,
//! induced-subgraph search, the graph families and gadget constructions
//! used to study hereditary classes under powers, classification of
//! classes given by forbidden induced subgraphs, and a verification
//! harness with CSV reports.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `powerwidth` binary for the command-line
//! interface.

mod bitset;
pub mod classifier;
pub mod cliquewidth;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod power;
mod rng;
pub mod structure;
pub mod suites;

pub use graph::{Distance, Graph, GraphError, Vertex};
