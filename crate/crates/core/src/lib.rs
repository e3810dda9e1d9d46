//! p-centered colorings of sparse graphs.
//!
//! A vertex coloring is *p-centered* when every connected subgraph either
//! receives more than `p` colors or contains a color that occurs exactly once.
//! This crate provides
//!
//! * verifiers for p-centered and p-linear colorings ([`verifier`]),
//! * exact backtracking oracles for small graphs ([`oracle`]),
//! * a randomized colorer for bounded-degree graphs ([`degree`]),
//! * an `O(p log p)`-color algorithm for outerplanar graphs ([`outerplanar`]),
//! * the layered recursion for bounded simple treewidth ([`stw`]),
//! * composers that lift colorings through layered partitions ([`compose`]),
//! * generators for the relevant graph families ([`generators`]),
//! * a command-line front end ([`cli`]).

pub mod cli;
pub mod color;
pub mod compose;
pub mod decomposition;
pub mod degree;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod layering;
pub mod oracle;
pub mod outerplanar;
pub mod stw;
pub mod verifier;

pub use color::ColorAssignment;
pub use decomposition::{validate_decomposition, SimpleTreeDecomposition};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use layering::{bfs_layering, Layering, VertexPartition};
