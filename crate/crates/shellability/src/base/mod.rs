//! Core data types: vertex sets, labelings, simplicial complexes, clutters,
//! graphs, and trees.  Everything here is immutable after construction;
//! operations return new values.

mod clutter;
mod complex;
mod graph;
mod labeling;
pub mod vset;

pub use clutter::Clutter;
pub use complex::SimplicialComplex;
pub use graph::{Graph, Tree};
pub use labeling::Labeling;
pub use vset::{k_subsets, maximal_sets, minimal_sets, minimal_transversals, VertexSet, MAX_UNIVERSE};
