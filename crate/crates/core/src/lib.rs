//! Exact combinatorics for graph-encoded manifolds (gems).
//!
//! A gem of an `n`-manifold is an `(n+1)`-edge-colored multigraph without
//! loops. Each vertex stands for an `n`-simplex of a colored triangulation and
//! each color-`c` edge glues two facets along the face opposite their `c`-labeled
//! vertices. Everything in this crate is a count or a rewrite on that graph:
//!
//! - [`gem`]: the data model, residues, boundary graphs, contractedness
//! - [`orientation`]: bipartitions as facet orientations
//! - [`iso`]: color-preserving isomorphism
//! - [`complex`]: f-vector and Euler characteristic of the encoded complex
//! - [`moves`]: dipole cancellation/insertion and polyhedral glue moves
//! - [`genus`]: bicolored cycle counts and regular genus
//! - [`constructions`]: sphere, cylinder and `S^{n-1} x S^1` families
//! - [`degree`]: color-compatible vertex maps and their degree
//! - [`reduction`]: the glue-move/dipole schedule collapsing a cylinder gem
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod color;
pub mod complex;
pub mod constructions;
pub mod degree;
mod error;
pub mod gem;
pub mod genus;
pub mod iso;
pub mod moves;
pub mod orientation;
pub mod reduction;

pub use color::{Color, ColorSet};
pub use error::Error;
pub use gem::{Edge, Gem, ResidueReport, VertexLabel};
pub use orientation::Orientation;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
