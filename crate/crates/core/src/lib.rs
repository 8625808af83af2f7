//! Feynman 5-splitting for graphs and enhanced graphs.
//!
//! The crate decides whether a graph (or an enhanced graph carrying
//! contract-proof and delete-proof edges) is 5-split, computes Kirchhoff and
//! Dodgson polynomials and 5-invariants, computes graph width and caterpillar
//! width, tests minors, and regenerates the catalog of minor-minimal
//! non-split enhanced graphs by exhaustive search.

pub mod cli;
pub mod dual;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod kirchhoff;
pub mod linalg;
pub mod matroid;
pub mod minors;
pub mod poly;
pub mod search;
pub mod sets;
pub mod splitting;
pub mod width;

pub use error::{Error, Result};
pub use graph::{GraphSeparation, MultiGraph};
pub use sets::{EdgeId, EdgeSet, Vertex, VertexSet};
