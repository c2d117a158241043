//! Clutters: antichains of non-empty edges over a labeled universe.

use crate::base::labeling::Labeling;
use crate::base::vset::{sort_canonically, VertexSet};
use crate::error::{Error, Result};

/// A clutter on a labeled universe: a family of edges none of which contains
/// another.  Edges are stored in canonical order.
///
/// One degenerate object is representable: the clutter `{∅}` whose single
/// edge is empty.  It arises from contractions (contracting `v` when `{v}`
/// is an edge) and cannot be built through [`Clutter::new`], which insists
/// on non-empty edges; use [`Clutter::degenerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clutter {
    universe: Labeling,
    edges: Vec<VertexSet>,
}

impl Clutter {
    /// Build a clutter from explicitly given edges.  Every edge must be
    /// non-empty and within the universe, and no edge may contain another
    /// (the family must already be an antichain; nothing is dropped
    /// silently).  Duplicates count as comparable.
    pub fn new<I: IntoIterator<Item = VertexSet>>(
        universe: Labeling,
        edges: I,
    ) -> Result<Clutter> {
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            universe.check_set(e)?;
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
        }
        for i in 0..edges.len() {
            for j in 0..edges.len() {
                if i != j && edges[i].is_subset_of(edges[j]) {
                    return Err(Error::ComparableEdges(
                        universe.render_set(edges[i]),
                        universe.render_set(edges[j]),
                    ));
                }
            }
        }
        sort_canonically(&mut edges);
        Ok(Clutter { universe, edges })
    }

    /// Internal constructor for families already known to be antichains
    /// (possibly containing the empty edge).
    pub(crate) fn from_antichain(universe: Labeling, mut edges: Vec<VertexSet>) -> Clutter {
        sort_canonically(&mut edges);
        debug_assert!(edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges
                .iter()
                .enumerate()
                .all(|(j, &f)| i == j || !e.is_subset_of(f))));
        Clutter { universe, edges }
    }

    /// The clutter with no edges at all on the given universe.
    pub fn edgeless(universe: Labeling) -> Clutter {
        Clutter {
            universe,
            edges: Vec::new(),
        }
    }

    /// The degenerate clutter `{∅}`.
    pub fn degenerate(universe: Labeling) -> Clutter {
        Clutter {
            universe,
            edges: vec![VertexSet::EMPTY],
        }
    }

    pub fn universe(&self) -> &Labeling {
        &self.universe
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// `true` exactly for the degenerate clutter `{∅}`.
    pub fn is_degenerate(&self) -> bool {
        self.edges.len() == 1 && self.edges[0].is_empty()
    }

    /// Common edge cardinality: `None` when edgeless or non-uniform,
    /// `Some(0)` for the degenerate clutter.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?;
        let d = first.len();
        if self.edges.iter().all(|e| e.len() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Smallest edge cardinality, if there are edges.
    pub fn min_edge_cardinality(&self) -> Option<usize> {
        self.edges.iter().map(|e| e.len()).min()
    }

    /// Edges containing a vertex.
    pub fn edges_at(&self, v: usize) -> Vec<VertexSet> {
        self.edges.iter().copied().filter(|e| e.contains(v)).collect()
    }

    /// Render the edge list as `{a,b}, {c,d}` using the universe labels.
    pub fn render_edges(&self) -> String {
        self.edges
            .iter()
            .map(|&e| self.universe.render_set(e))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    #[test]
    fn rejects_comparable_and_empty_edges() {
        let lab = Labeling::numeric(3).unwrap();
        assert!(matches!(
            Clutter::new(lab.clone(), [vs(&[0]), vs(&[0, 1])]),
            Err(Error::ComparableEdges(..))
        ));
        assert!(matches!(
            Clutter::new(lab.clone(), [vs(&[0, 1]), vs(&[0, 1])]),
            Err(Error::ComparableEdges(..))
        ));
        assert!(matches!(
            Clutter::new(lab, [VertexSet::EMPTY]),
            Err(Error::EmptyEdge)
        ));
    }

    #[test]
    fn canonical_edge_order() {
        let lab = Labeling::numeric(4).unwrap();
        let c = Clutter::new(lab, [vs(&[3]), vs(&[0, 1]), vs(&[0, 2])]).unwrap();
        assert_eq!(c.edges(), &[vs(&[0, 1]), vs(&[0, 2]), vs(&[3])]);
        assert_eq!(c.uniformity(), None);
        assert_eq!(c.min_edge_cardinality(), Some(1));
    }

    #[test]
    fn degenerate_and_edgeless_flags() {
        let lab = Labeling::numeric(2).unwrap();
        let d = Clutter::degenerate(lab.clone());
        let e = Clutter::edgeless(lab);
        assert!(d.is_degenerate());
        assert!(!d.is_edgeless());
        assert_eq!(d.uniformity(), Some(0));
        assert!(e.is_edgeless());
        assert!(!e.is_degenerate());
        assert_eq!(e.uniformity(), None);
    }

    #[test]
    fn uniformity_of_a_triangle_family() {
        let lab = Labeling::numeric(4).unwrap();
        let c = Clutter::new(lab, [vs(&[0, 1, 2]), vs(&[0, 1, 3])]).unwrap();
        assert_eq!(c.uniformity(), Some(3));
        assert_eq!(c.edges_at(3), vec![vs(&[0, 1, 3])]);
    }
}
