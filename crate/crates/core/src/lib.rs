//! Structural algorithms for graphs with no induced subdivision of K4 and no
//! wheel, and for chordless graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * decomposition by clique cutsets and proper 2-cutsets ([`cutsets`],
//!   [`tree`]),
//! * the four indecomposable classes ([`classify`]),
//! * recognition of {ISK4, wheel}-free graphs and of chordless graphs
//!   ([`recognize`]),
//! * constructive 3-colorings and 3-edge-colorings ([`color`]),
//! * brute-force oracles, generators and a small-graph catalogue used to
//!   cross-check all of the above ([`oracle`]).
//!
//! File formats, the bundled catalogue asset and the command-line front end
//! live in the companion `wheelfree` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod color;
pub mod cutsets;
pub mod graph;
pub mod line;
pub mod multigraph;
pub mod oracle;
pub mod recognize;
pub mod tree;

pub use classify::{LeafClass, RichSquareShape};
pub use color::{ColorError, Coloring, EdgeColoring};
pub use cutsets::{CutsetKind, CutsetWitness};
pub use graph::{Graph, GraphError, VertexSet};
pub use multigraph::Multigraph;
pub use oracle::Certificate;
pub use recognize::{Decision, RejectReason, Rejection};
pub use tree::{DecompositionTree, Origin};
