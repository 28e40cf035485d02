//! Command-line front end and file formats for `distinguo-core`: graph6
//! reading and writing, versioned JSON documents, the reproduction table,
//! conjecture probes and a root-split parallel solver.

pub mod cli;
pub mod graph6;
pub mod output;
pub mod parallel;
pub mod probe;
pub mod registry;
pub mod reproduce;

pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
