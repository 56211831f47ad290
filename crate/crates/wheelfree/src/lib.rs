//! File formats, the bundled small-graph catalogue, run reports and the
//! command-line front end for [`wheelfree_core`].

pub mod catalogue;
pub mod check;
pub mod cli;
pub mod dot;
pub mod formats;
pub mod report;

pub use formats::{from_edge_list, from_graph6, to_edge_list, to_graph6, Format, FormatError};
