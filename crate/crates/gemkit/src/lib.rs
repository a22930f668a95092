//! File formats and command-line plumbing around [`gemkit_core`].
//!
//! - [`document`]: the JSON gem/map document (`format_version` 1)
//! - [`dot`]: Graphviz export
//! - [`commands`]: one function per CLI subcommand, returning the JSON the
//!   binary prints

pub mod commands;
pub mod document;
pub mod dot;

pub use document::{parse, parse_gem, parse_map, serialize, serialize_map, DocumentError, GemDocument, Parsed};
