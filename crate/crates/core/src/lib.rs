//! Finite models of the zero-set intersection graph Γ(C(X)) of the ring of
//! continuous functions on a finite discrete space, their line graphs, and
//! an exhaustive checker for the graph-theoretic statements made about them.

pub mod error;
pub mod export;
pub mod graph;
pub mod line;
pub mod model;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Distance, Graph};
pub use line::{build_line_graph, EdgeVertex, LineGraph};
pub use model::{build_gamma, FunctionVertex, ModelConfig, ZeroSet, ZeroSetModel};
