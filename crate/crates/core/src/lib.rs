//! Star edge coloring toolkit.
//!
//! A *star edge coloring* is a proper edge coloring in which no path or
//! cycle of four edges is bichromatic (uses only two colors). This crate
//! provides:
//!
//! * a small multigraph representation with stable edge identities
//!   ([`graph::Multigraph`]), BFS spanning trees, block decompositions and
//!   canonical outerplanar embeddings;
//! * constructive colorings: trees with at most `floor(3*delta/2)` colors
//!   ([`tree::color_tree`]), outerplanar graphs with at most
//!   `floor(3*delta/2) + 12` colors ([`outerplanar::color_outerplanar`]),
//!   light cactus graphs with 4 colors boundary-star-free
//!   ([`cactus::color_light_cactus`]) and subcubic outerplanar graphs with
//!   at most 5 colors ([`subcubic::color_subcubic`]);
//! * a verifier for star edge colorings ([`verify`]);
//! * an exact backtracking solver for the star chromatic index ([`solver`]);
//! * deterministic instance generators ([`gen`]).
//!
//! The crate is `no_std` compatible (it requires `alloc`). Anything that
//! needs a clock or the filesystem lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blocks;
pub mod cactus;
pub mod coloring;
pub mod embed;
pub mod error;
pub mod gen;
pub mod graph;
mod incremental;
pub mod outerplanar;
pub mod solver;
pub mod subcubic;
pub mod tree;
pub mod verify;

pub use coloring::{Color, EdgeColoring};
pub use error::Error;
pub use graph::{EdgeId, LeveledTree, Multigraph, VertexId};
