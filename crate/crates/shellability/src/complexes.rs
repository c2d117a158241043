//! Structural operations on simplicial complexes: induced subcomplexes,
//! links and deletions, complement complexes, vertex expansions, shedding
//! vertices, the matroid test, and the dual-of-independence construction.

use itertools::Itertools;

use crate::base::{k_subsets, maximal_sets, Clutter, Labeling, SimplicialComplex, VertexSet};
use crate::clutters::d_nonedges;
use crate::error::{Error, Result};

/// The induced subcomplex `Δ_W`: all faces of `Δ` contained in `W`, on the
/// same universe.  Its facets are the maximal sets among `{F ∩ W}`.
pub fn induced_subcomplex(complex: &SimplicialComplex, w: VertexSet) -> Result<SimplicialComplex> {
    complex.universe().check_set(w)?;
    let restricted: Vec<VertexSet> = complex.facets().iter().map(|&f| f.intersection(w)).collect();
    SimplicialComplex::new(complex.universe().clone(), restricted)
}

/// The link of a vertex: `{F : v ∉ F, F ∪ {v} ∈ Δ}`, re-indexed onto the
/// universe without `v`.  Void when `v` lies in no facet.
pub fn link(complex: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    let universe = complex.universe();
    universe.check_vertex(v)?;
    let keep = universe.full_set().remove(v);
    let facets: Vec<VertexSet> = complex
        .facets()
        .iter()
        .filter(|f| f.contains(v))
        .map(|&f| f.remove(v).compress_into(keep))
        .collect();
    SimplicialComplex::new(universe.restrict(keep), facets)
}

/// The deletion `Δ ∖ v`: the complex of all faces avoiding `v`, re-indexed
/// onto the universe without `v`.  Its facets are the maximal sets among
/// `{F ∖ {v}}`.
pub fn deletion(complex: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    let universe = complex.universe();
    universe.check_vertex(v)?;
    let keep = universe.full_set().remove(v);
    let facets: Vec<VertexSet> = complex
        .facets()
        .iter()
        .map(|&f| f.remove(v).compress_into(keep))
        .collect();
    SimplicialComplex::new(universe.restrict(keep), facets)
}

/// The complement complex `Δ^c` of a pure complex: facets `{V ∖ F}`.
/// An involution; requires purity so the complements form an antichain.
pub fn complement_complex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    require_pure(complex)?;
    let full = complex.universe().full_set();
    let facets: Vec<VertexSet> = complex.facets().iter().map(|&f| full.minus(f)).collect();
    SimplicialComplex::new(complex.universe().clone(), facets)
}

fn require_pure(complex: &SimplicialComplex) -> Result<()> {
    if complex.is_pure() {
        return Ok(());
    }
    let facets = complex.facets();
    let first = facets[0];
    let other = facets
        .iter()
        .copied()
        .find(|f| f.len() != first.len())
        .expect("impure complex has facets of different sizes");
    Err(Error::NotPure(
        complex.universe().render_set(first),
        complex.universe().render_set(other),
    ))
}

/// A vertex expansion: each base vertex `i` (1-based) is replaced by copies
/// `x_{i,1}, …, x_{i,s_i}`, and a base facet turns into one expanded facet
/// per choice of copy for each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    base: SimplicialComplex,
    multiplicities: Vec<usize>,
    expanded: SimplicialComplex,
}

impl Expansion {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn expanded(&self) -> &SimplicialComplex {
        &self.expanded
    }
}

/// Expand a complex by per-vertex multiplicities `s` (all ≥ 1, summing to
/// at most the universe cap).  Expanded vertex labels are `x_{i,j}` with
/// `i` the 1-based base vertex index and `j ∈ 1..=s_i`, ordered i-major.
/// The expanded facet count is `Σ_F Π_{i∈F} s_i`.
pub fn expand(complex: &SimplicialComplex, s: &[usize]) -> Result<Expansion> {
    let n = complex.universe().len();
    if s.len() != n {
        return Err(Error::MultiplicityLengthMismatch(s.len(), n));
    }
    if s.iter().any(|&si| si == 0) {
        return Err(Error::MultiplicityTooSmall);
    }
    let total: usize = s.iter().sum();
    if total > crate::base::MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge(total, crate::base::MAX_UNIVERSE));
    }

    // offsets[i] = first expanded index of base vertex i.
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0usize;
    for &si in s {
        offsets.push(acc);
        acc += si;
    }
    let labels = (0..n)
        .flat_map(|i| (1..=s[i]).map(move |j| format!("x_{{{},{}}}", i + 1, j)))
        .collect::<Vec<_>>();
    let expanded_universe = Labeling::new(labels)?;

    let mut expanded_facets: Vec<VertexSet> = Vec::new();
    for &facet in complex.facets() {
        let vertices: Vec<usize> = facet.iter().collect();
        if vertices.is_empty() {
            expanded_facets.push(VertexSet::EMPTY);
            continue;
        }
        let choice_sets: Vec<Vec<usize>> = vertices
            .iter()
            .map(|&i| (0..s[i]).map(|j| offsets[i] + j).collect())
            .collect();
        for choice in choice_sets.into_iter().multi_cartesian_product() {
            expanded_facets.push(VertexSet::from_indices(choice));
        }
    }

    let expected: usize = complex
        .facets()
        .iter()
        .map(|f| f.iter().map(|i| s[i]).product::<usize>())
        .sum();
    let expanded = SimplicialComplex::new(expanded_universe, expanded_facets)?;
    debug_assert_eq!(
        expanded.facet_count(),
        expected,
        "expansions of an antichain form an antichain"
    );
    Ok(Expansion {
        base: complex.clone(),
        multiplicities: s.to_vec(),
        expanded,
    })
}

/// Is `v` a shedding vertex: no facet of `link(Δ, v)` is a facet of
/// `Δ ∖ v`?  (Both live on the universe without `v`, so facets compare
/// directly.)  Vacuously true when `v` lies in no facet.
pub fn is_shedding_vertex(complex: &SimplicialComplex, v: usize) -> Result<bool> {
    let lk = link(complex, v)?;
    let del = deletion(complex, v)?;
    Ok(lk.facets().iter().all(|f| !del.facets().contains(f)))
}

/// Maximum universe size accepted by [`is_matroid_complex`].
pub const MAX_MATROID_UNIVERSE: usize = 20;

/// Is `Δ` the complex of independent sets of a matroid?  Checked by the
/// restriction characterization: every induced subcomplex `Δ_W` is pure.
/// Exhausts all `2^n` subsets, so the universe is capped.
pub fn is_matroid_complex(complex: &SimplicialComplex) -> Result<bool> {
    let n = complex.universe().len();
    if n > MAX_MATROID_UNIVERSE {
        return Err(Error::MatroidCheckTooLarge(n, MAX_MATROID_UNIVERSE));
    }
    let facets = complex.facets();
    for w_bits in 0..(1u64 << n) {
        let w = VertexSet::from_bits(w_bits);
        let induced = maximal_sets(
            &facets
                .iter()
                .map(|&f| f.intersection(w))
                .collect::<Vec<_>>(),
        );
        if let Some(first) = induced.first() {
            if induced.iter().any(|f| f.len() != first.len()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The pure complex whose facets are the complements of the `d`-non-edges
/// of a clutter: the Alexander dual of the independence complex of
/// `c_d(C)`.  Void when `C` has every possible `d`-set as an edge.
pub fn dual_of_independence(clutter: &Clutter, d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::CardinalityTooSmall);
    }
    let nonedges = d_nonedges(clutter, d)?;
    let full = clutter.universe().full_set();
    let facets: Vec<VertexSet> = nonedges.edges().iter().map(|&e| full.minus(e)).collect();
    SimplicialComplex::new(clutter.universe().clone(), facets)
}

/// All subsets of the universe of each cardinality — convenience used by
/// generators and tests.
pub fn all_subsets_of_size(universe: &Labeling, k: usize) -> Vec<VertexSet> {
    k_subsets(universe.len(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::find_strong_shelling;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let lab = Labeling::numeric(n).unwrap();
        SimplicialComplex::new(lab, facets.iter().map(|f| vs(f))).unwrap()
    }

    #[test]
    fn induced_subcomplex_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            induced_subcomplex(&c, vs(&[0, 1])).unwrap().facets(),
            &[vs(&[0, 1])]
        );
        assert_eq!(
            induced_subcomplex(&c, vs(&[0, 2])).unwrap().facets(),
            &[vs(&[0]), vs(&[2])]
        );
        let on_empty = induced_subcomplex(&c, VertexSet::EMPTY).unwrap();
        assert_eq!(on_empty.facets(), &[VertexSet::EMPTY]);
        // The void complex stays void under restriction.
        let void = SimplicialComplex::void(Labeling::numeric(3).unwrap());
        assert!(induced_subcomplex(&void, vs(&[0])).unwrap().is_void());
    }

    #[test]
    fn link_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let lk = link(&c, 1).unwrap();
        assert_eq!(lk.universe().labels(), &["1", "3"]);
        assert_eq!(lk.facets(), &[vs(&[0]), vs(&[1])]);

        let simplex = complex(3, &[&[0, 1, 2]]);
        let lk = link(&simplex, 0).unwrap();
        assert_eq!(lk.universe().labels(), &["2", "3"]);
        assert_eq!(lk.facets(), &[vs(&[0, 1])]);

        let c = complex(3, &[&[0, 1]]);
        assert!(link(&c, 2).unwrap().is_void());
    }

    #[test]
    fn deletion_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let del = deletion(&c, 0).unwrap();
        assert_eq!(del.universe().labels(), &["2", "3"]);
        assert_eq!(del.facets(), &[vs(&[0, 1])]);

        let c = complex(3, &[&[0, 1]]);
        let del = deletion(&c, 2).unwrap();
        assert_eq!(del.facets(), &[vs(&[0, 1])]);

        let simplex = complex(3, &[&[0, 1, 2]]);
        let del = deletion(&simplex, 1).unwrap();
        assert_eq!(del.facets(), &[vs(&[0, 1])]);
    }

    #[test]
    fn complement_complex_examples() {
        let c = complex(3, &[&[0, 1]]);
        let cc = complement_complex(&c).unwrap();
        assert_eq!(cc.facets(), &[vs(&[2])]);
        assert_eq!(complement_complex(&cc).unwrap(), c);

        // The 4-cycle's edge complex is its own complement.
        let c4 = complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(complement_complex(&c4).unwrap(), c4);

        let impure = complex(3, &[&[0, 1], &[2]]);
        assert!(matches!(
            complement_complex(&impure),
            Err(Error::NotPure(..))
        ));
    }

    #[test]
    fn expansion_identity_and_counts() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let id = expand(&c, &[1, 1, 1]).unwrap();
        assert_eq!(id.expanded().facet_count(), 2);
        assert_eq!(
            id.expanded().universe().labels(),
            &["x_{1,1}", "x_{2,1}", "x_{3,1}"]
        );

        // ⟨12,23⟩ with s = (1,2,1): 1·2 + 2·1 = 4 facets.
        let e = expand(&c, &[1, 2, 1]).unwrap();
        assert_eq!(e.expanded().facet_count(), 4);
        assert_eq!(
            e.expanded().universe().labels(),
            &["x_{1,1}", "x_{2,1}", "x_{2,2}", "x_{3,1}"]
        );

        // ⟨12⟩ with s = (2,1): two expanded facets.
        let edge = complex(2, &[&[0, 1]]);
        let e = expand(&edge, &[2, 1]).unwrap();
        assert_eq!(e.expanded().facets(), &[vs(&[0, 2]), vs(&[1, 2])]);
    }

    #[test]
    fn expansion_edge_cases_and_errors() {
        let c = complex(2, &[&[0, 1]]);
        assert!(matches!(
            expand(&c, &[1]),
            Err(Error::MultiplicityLengthMismatch(1, 2))
        ));
        assert!(matches!(
            expand(&c, &[0, 1]),
            Err(Error::MultiplicityTooSmall)
        ));
        assert!(matches!(
            expand(&c, &[60, 10]),
            Err(Error::UniverseTooLarge(70, 64))
        ));

        let void = SimplicialComplex::void(Labeling::numeric(2).unwrap());
        assert!(expand(&void, &[2, 2]).unwrap().expanded().is_void());
        let empty = SimplicialComplex::empty_complex(Labeling::numeric(2).unwrap());
        assert_eq!(
            expand(&empty, &[2, 2]).unwrap().expanded().facets(),
            &[VertexSet::EMPTY]
        );
    }

    #[test]
    fn shedding_vertex_examples() {
        // ⟨12,23⟩, v=1: link ⟨2⟩ vs deletion ⟨23⟩ → shedding.
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        assert!(is_shedding_vertex(&c, 0).unwrap());

        // ⟨12,3⟩, v=1: link ⟨2⟩ vs deletion ⟨2,3⟩ → {2} shared → not shedding.
        let c = complex(3, &[&[0, 1], &[2]]);
        assert!(!is_shedding_vertex(&c, 0).unwrap());

        // A simplex has no shedding vertices: link and deletion share a facet.
        let simplex = complex(3, &[&[0, 1, 2]]);
        for v in 0..3 {
            assert!(!is_shedding_vertex(&simplex, v).unwrap());
        }
        let point = complex(1, &[&[0]]);
        assert!(!is_shedding_vertex(&point, 0).unwrap());
    }

    #[test]
    fn shedding_partitions_facets() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let v = 0;
        assert!(is_shedding_vertex(&c, v).unwrap());
        let total = c.facet_count();
        let del = deletion(&c, v).unwrap().facet_count();
        let lk = link(&c, v).unwrap().facet_count();
        assert_eq!(total, del + lk);
    }

    #[test]
    fn matroid_examples() {
        assert!(is_matroid_complex(&complex(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap());
        assert!(is_matroid_complex(&complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])).unwrap());
        assert!(!is_matroid_complex(&complex(3, &[&[0, 1], &[2]])).unwrap());

        let big = SimplicialComplex::void(Labeling::numeric(21).unwrap());
        assert!(matches!(
            is_matroid_complex(&big),
            Err(Error::MatroidCheckTooLarge(21, 20))
        ));
    }

    #[test]
    fn matroid_complexes_are_strongly_shellable() {
        let u34 =
            SimplicialComplex::new(Labeling::numeric(4).unwrap(), k_subsets(4, 3)).unwrap();
        let examples = [
            complex(3, &[&[0, 1], &[0, 2], &[1, 2]]),
            complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            u34,
        ];
        for c in &examples {
            assert!(is_matroid_complex(c).unwrap());
            assert!(find_strong_shelling(c).unwrap().is_some());
        }
    }

    #[test]
    fn dual_of_independence_examples() {
        let lab = Labeling::numeric(3).unwrap();
        let single = Clutter::new(lab.clone(), [vs(&[0, 1])]).unwrap();
        let d = dual_of_independence(&single, 2).unwrap();
        assert_eq!(d.facets(), &[vs(&[0]), vs(&[1])]);

        let k32 = Clutter::new(lab.clone(), k_subsets(3, 2)).unwrap();
        assert!(dual_of_independence(&k32, 2).unwrap().is_void());

        let edgeless = Clutter::edgeless(lab);
        let d = dual_of_independence(&edgeless, 2).unwrap();
        assert!(d.is_pure());
        assert_eq!(d.dim(), Some(0));
        assert_eq!(d.facet_count(), 3);

        assert!(matches!(
            dual_of_independence(&edgeless, 0),
            Err(Error::CardinalityTooSmall)
        ));
    }
}
