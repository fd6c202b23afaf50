//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{EdgeId, VertexId};

/// Obstruction reported when a graph admits no outerplanar embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Some 2-connected block has no Hamiltonian outer boundary.
    NoOuterCycle { block_vertices: Vec<VertexId> },
    /// Two chords of a block's outer cycle cross.
    CrossingChords { first: EdgeId, second: EdgeId },
    /// Parallel edges inside a block on three or more vertices are not
    /// handled by the canonical embedder.
    ParallelEdgesInBlock { u: VertexId, v: VertexId },
}

/// Witness for a violated light-cactus invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CactusWitness {
    /// A vertex whose degree is neither 2 nor 4.
    BadDegree { vertex: VertexId, degree: usize },
    /// A degree-4 vertex that is not a cutvertex.
    Degree4NotCut { vertex: VertexId },
    /// A cutvertex of degree 2 (cannot happen in a light cactus).
    CutNotDegree4 { vertex: VertexId },
    /// A block that is neither a cycle nor a single edge, or a bridge.
    NonCycleBlock { block: usize },
    /// A cycle block carrying more than two degree-2 vertices.
    TooManyDegree2 { block: usize, count: usize },
    /// A cycle block with exactly two degree-2 vertices that are not adjacent.
    NonAdjacentDegree2 { block: usize, a: VertexId, b: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("self-loops are not supported (vertex {0})")]
    SelfLoop(VertexId),
    #[error("graph is disconnected: vertex {unreached} is not reachable")]
    Disconnected { unreached: VertexId },
    #[error("graph is not a tree: {edges} edges on {vertices} vertices")]
    NotATree { vertices: usize, edges: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not outerplanar: {0:?}")]
    NotOuterplanar(Obstruction),
    #[error("not a light cactus: {0:?}")]
    NotLightCactus(CactusWitness),
    #[error("maximum degree {degree} exceeds 3 (vertex {vertex})")]
    DegreeTooHigh { vertex: VertexId, degree: usize },
    #[error("coloring is partial: {0:?} uncolored")]
    Uncolored(Vec<EdgeId>),
    #[error("color {color} of edge {edge} outside palette of size {palette}")]
    ColorOutOfRange { edge: EdgeId, color: u32, palette: usize },
    #[error("internal contradiction: {0}")]
    Internal(String),
}
