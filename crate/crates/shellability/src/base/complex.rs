//! Simplicial complexes represented by their facet lists.

use crate::base::labeling::Labeling;
use crate::base::vset::{maximal_sets, VertexSet};
use crate::error::Result;

/// A simplicial complex on a labeled universe, stored as its list of facets
/// (inclusion-maximal faces) in canonical order (size descending, bit
/// patterns ascending).
///
/// Two degenerate complexes are distinguished: the *void* complex has no
/// faces at all (empty facet list), while the *empty* complex `{∅}` has the
/// single facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Labeling,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Build a complex generated by `faces`: facets are the inclusion-maximal
    /// members.  Passing no faces yields the void complex.
    pub fn new<I: IntoIterator<Item = VertexSet>>(
        universe: Labeling,
        faces: I,
    ) -> Result<SimplicialComplex> {
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        for &f in &faces {
            universe.check_set(f)?;
        }
        let facets = maximal_sets(&faces);
        Ok(SimplicialComplex { universe, facets })
    }

    /// The void complex (no faces) on a universe.
    pub fn void(universe: Labeling) -> SimplicialComplex {
        SimplicialComplex {
            universe,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}` whose only face is the empty set.
    pub fn empty_complex(universe: Labeling) -> SimplicialComplex {
        SimplicialComplex {
            universe,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on a universe (single facet: every vertex).
    pub fn simplex(universe: Labeling) -> SimplicialComplex {
        let full = universe.full_set();
        SimplicialComplex {
            universe,
            facets: vec![full],
        }
    }

    pub fn universe(&self) -> &Labeling {
        &self.universe
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for `{∅}`,
    /// otherwise the maximum facet cardinality minus one.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    /// A complex is pure when all facets share one cardinality.  The void
    /// complex and `{∅}` are vacuously pure.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Membership test: a set is a face iff it lies inside some facet.
    pub fn is_face(&self, set: VertexSet) -> bool {
        self.facets.iter().any(|&f| set.is_subset_of(f))
    }

    /// Vertices that actually appear in some face.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// Render the facet list as `{a,b}, {c}` using the universe labels.
    pub fn render_facets(&self) -> String {
        self.facets
            .iter()
            .map(|&f| self.universe.render_set(f))
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
    fn facets_are_maximalized_and_sorted() {
        let lab = Labeling::numeric(4).unwrap();
        let c = SimplicialComplex::new(
            lab,
            [vs(&[0]), vs(&[0, 1]), vs(&[2, 3]), vs(&[1]), vs(&[0, 1])],
        )
        .unwrap();
        assert_eq!(c.facets(), &[vs(&[0, 1]), vs(&[2, 3])]);
        assert_eq!(c.dim(), Some(1));
        assert!(c.is_pure());
        assert!(c.is_face(vs(&[1])));
        assert!(c.is_face(VertexSet::EMPTY));
        assert!(!c.is_face(vs(&[1, 2])));
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let lab = Labeling::numeric(2).unwrap();
        let void = SimplicialComplex::void(lab.clone());
        let empty = SimplicialComplex::empty_complex(lab);
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert!(!void.is_face(VertexSet::EMPTY));
        assert!(empty.is_face(VertexSet::EMPTY));
        assert_ne!(void, empty);
    }

    #[test]
    fn impure_complex_detected() {
        let lab = Labeling::numeric(3).unwrap();
        let c = SimplicialComplex::new(lab, [vs(&[0, 1]), vs(&[2])]).unwrap();
        assert!(!c.is_pure());
        assert_eq!(c.dim(), Some(1));
    }
}
