//! Strong shellability of simplicial complexes, chordality notions for
//! clutters and graphs, and the combinatorial constructions connecting them:
//! facet-order searches and verifiers, complex and clutter operations
//! (links, deletions, complements, expansions, minors), perfect elimination
//! orders, squarefree monomial ideals with linear quotients, generic graphs
//! of trees, and structure theory for bipartite graphs whose edge complexes
//! are strongly shellable.
//!
//! Mathematical "no" answers (a complex that is not strongly shellable, a
//! graph that is not chordal) are ordinary values carrying witnesses;
//! [`Error`] is reserved for malformed inputs and exceeded size guards.

#![forbid(unsafe_code)]

pub mod base;
pub mod bipartite;
pub mod clutters;
pub mod complexes;
pub mod error;
pub mod generic_tree;
pub mod graphs;
pub mod ideals;
pub mod shelling;

pub use base::{Clutter, Graph, Labeling, SimplicialComplex, Tree, VertexSet};
pub use error::{Error, Result};
