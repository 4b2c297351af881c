//! Exhaustive search and certificate checking for rainbow Turán problems
//! on planar graphs: how many edges can an n-vertex planar graph carry if
//! some proper edge-coloring of it has no rainbow path on k vertices?

pub mod codec;
pub mod colorer;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod lemmas;
pub mod planarity;
pub mod rainbow;

pub use error::{Error, Result};
pub use graph::{disjoint_union, Color, ColoredGraph, Graph, Vertex};
