//! Shellings and strong shellings: verifiers, backtracking searches, the
//! facet distance, the codimension-one graph, and a brute-force oracle.
//!
//! A linear order `F_1, …, F_t` of the facets of a complex is a *shelling*
//! if for every pair `i < j` there is some `k < j` with `F_j ∖ F_k = {v}`
//! for a vertex `v ∉ F_i`.  It is a *strong shelling* if for every `i < j`
//! there is `k < j` with `|F_j ∖ F_k| = 1` and `F_i ∩ F_j ⊆ F_k ⊆ F_i ∪ F_j`
//! (taking `k = i` is allowed).  For pure complexes the strong condition is
//! equivalent to: `dis(F_k, F_j) = 1` and `dis(F_i, F_k) = dis(F_i, F_j) − 1`
//! with `dis(F, G) = |F ∖ G|`.

pub(crate) mod search;

use itertools::Itertools;

use crate::base::{Graph, Labeling, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
pub use search::MAX_SEARCH_ITEMS;

/// Distance between two sets of equal cardinality: `|F ∖ G|`.
pub fn facet_distance(f: VertexSet, g: VertexSet) -> Result<usize> {
    if f.len() != g.len() {
        return Err(Error::UnequalCardinalities(
            format!("{f:?}"),
            format!("{g:?}"),
        ));
    }
    Ok(f.minus(g).len())
}

/// How far a facet order has been checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderStatus {
    Unverified,
    Shelling,
    StrongShelling,
}

/// A linear order on the facets of a complex, stored as a permutation of
/// facet indices (positions in [`SimplicialComplex::facets`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetOrder {
    complex: SimplicialComplex,
    order: Vec<usize>,
    status: OrderStatus,
}

impl FacetOrder {
    /// Wrap a permutation of the facet indices; the status starts out
    /// [`OrderStatus::Unverified`].
    pub fn new(complex: SimplicialComplex, order: Vec<usize>) -> Result<FacetOrder> {
        check_permutation(&complex, &order)?;
        Ok(FacetOrder {
            complex,
            order,
            status: OrderStatus::Unverified,
        })
    }

    /// Crate-internal: wrap an order whose status has just been established
    /// by an explicit verification or a verified construction.
    pub(crate) fn with_status(
        complex: SimplicialComplex,
        order: Vec<usize>,
        status: OrderStatus,
    ) -> FacetOrder {
        FacetOrder {
            complex,
            order,
            status,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The permutation of facet indices.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn status(&self) -> OrderStatus {
        self.status
    }

    /// Facets in the order given by the permutation.
    pub fn facets_in_order(&self) -> Vec<VertexSet> {
        self.order
            .iter()
            .map(|&i| self.complex.facets()[i])
            .collect()
    }

    /// Render as `{1,2} < {2,3} < …` with universe labels.
    pub fn render(&self) -> String {
        self.facets_in_order()
            .iter()
            .map(|&f| self.complex.universe().render_set(f))
            .collect::<Vec<_>>()
            .join(" < ")
    }
}

/// Result of verifying one facet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verified {
    Valid,
    /// The first failing pair, as *positions* within the order (`earlier`
    /// < `later`): no admissible witness exists for this pair.
    FirstViolation { earlier: usize, later: usize },
}

impl Verified {
    pub fn is_valid(self) -> bool {
        matches!(self, Verified::Valid)
    }
}

fn check_permutation(complex: &SimplicialComplex, order: &[usize]) -> Result<()> {
    let t = complex.facet_count();
    if order.len() != t {
        return Err(Error::NotAPermutation(t));
    }
    let mut seen = vec![false; t];
    for &i in order {
        if i >= t || seen[i] {
            return Err(Error::NotAPermutation(t));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Does `k` witness the *strong* condition for the pair `(i, j)`?
fn strong_witness(fi: VertexSet, fj: VertexSet, fk: VertexSet) -> bool {
    fj.minus(fk).len() == 1
        && fi.intersection(fj).is_subset_of(fk)
        && fk.is_subset_of(fi.union(fj))
}

/// Does `k` witness the plain shelling condition for the pair `(i, j)`?
fn shelling_witness(fi: VertexSet, fj: VertexSet, fk: VertexSet) -> bool {
    let dropped = fj.minus(fk);
    dropped.len() == 1 && !dropped.intersects(fi)
}

fn verify_order_with(
    complex: &SimplicialComplex,
    order: &[usize],
    witness: fn(VertexSet, VertexSet, VertexSet) -> bool,
) -> Result<Verified> {
    check_permutation(complex, order)?;
    let facets = complex.facets();
    for j_pos in 1..order.len() {
        let fj = facets[order[j_pos]];
        for i_pos in 0..j_pos {
            let fi = facets[order[i_pos]];
            let found = (0..j_pos).any(|k_pos| witness(fi, fj, facets[order[k_pos]]));
            if !found {
                return Ok(Verified::FirstViolation {
                    earlier: i_pos,
                    later: j_pos,
                });
            }
        }
    }
    Ok(Verified::Valid)
}

/// Check a facet order against the strong shelling condition.  Scans pairs
/// in ascending `(later, earlier)` position order and reports the first
/// violation.
pub fn verify_strong_order(complex: &SimplicialComplex, order: &[usize]) -> Result<Verified> {
    verify_order_with(complex, order, strong_witness)
}

/// Check a facet order against the plain shelling condition.
pub fn verify_shelling_order(complex: &SimplicialComplex, order: &[usize]) -> Result<Verified> {
    verify_order_with(complex, order, shelling_witness)
}

/// Witness table: `table[i][j]` is the bitmask of facet indices `k` that
/// witness the condition for the ordered pair (earlier `i`, later `j`).
fn witness_table(
    facets: &[VertexSet],
    witness: fn(VertexSet, VertexSet, VertexSet) -> bool,
) -> Vec<Vec<u128>> {
    let t = facets.len();
    let mut table = vec![vec![0u128; t]; t];
    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            let mut mask = 0u128;
            for (k, &fk) in facets.iter().enumerate() {
                if k != j && witness(facets[i], facets[j], fk) {
                    mask |= 1u128 << k;
                }
            }
            table[i][j] = mask;
        }
    }
    table
}

fn find_order_with(
    complex: &SimplicialComplex,
    witness: fn(VertexSet, VertexSet, VertexSet) -> bool,
    status: OrderStatus,
) -> Result<Option<FacetOrder>> {
    let t = complex.facet_count();
    if t > MAX_SEARCH_ITEMS {
        return Err(Error::SearchTooLarge(MAX_SEARCH_ITEMS, t));
    }
    let table = witness_table(complex.facets(), witness);
    let found = search::lex_least_order(t, None, |j, chosen| {
        let mut remaining = chosen;
        while remaining != 0 {
            let i = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            if table[i][j] & chosen == 0 {
                return false;
            }
        }
        true
    });
    Ok(found.map(|order| FacetOrder::with_status(complex.clone(), order, status)))
}

/// Search for a shelling order.  Returns `Ok(None)` only after exhausting
/// the space of facet prefixes.  The first (lexicographically least in
/// canonical facet order) shelling found is returned.
pub fn find_shelling(complex: &SimplicialComplex) -> Result<Option<FacetOrder>> {
    let result = find_order_with(complex, shelling_witness, OrderStatus::Shelling)?;
    if let Some(ref fo) = result {
        debug_assert!(verify_shelling_order(complex, fo.order())?.is_valid());
    }
    Ok(result)
}

/// Search for a strong shelling order; same contract as [`find_shelling`].
pub fn find_strong_shelling(complex: &SimplicialComplex) -> Result<Option<FacetOrder>> {
    let result = find_order_with(complex, strong_witness, OrderStatus::StrongShelling)?;
    if let Some(ref fo) = result {
        debug_assert!(verify_strong_order(complex, fo.order())?.is_valid());
    }
    Ok(result)
}

/// The codimension-one graph `Γ(Δ)` of a pure complex: one vertex per facet
/// (labeled by the rendered facet), edges between facets at distance one.
pub fn codim_one_graph(complex: &SimplicialComplex) -> Result<Graph> {
    if !complex.is_pure() {
        let facets = complex.facets();
        let first = facets[0];
        let other = facets
            .iter()
            .copied()
            .find(|f| f.len() != first.len())
            .expect("impure complex has facets of different sizes");
        return Err(Error::NotPure(
            complex.universe().render_set(first),
            complex.universe().render_set(other),
        ));
    }
    let labels: Vec<String> = complex
        .facets()
        .iter()
        .map(|&f| complex.universe().render_set(f))
        .collect();
    let vertex_labeling = Labeling::new(labels)?;
    let facets = complex.facets();
    let mut edges = Vec::new();
    for i in 0..facets.len() {
        for j in (i + 1)..facets.len() {
            if facet_distance(facets[i], facets[j])? == 1 {
                edges.push(VertexSet::from_indices([i, j]));
            }
        }
    }
    Graph::new(vertex_labeling, edges)
}

/// Maximum facet count accepted by [`oracle_strong_shellable`].
pub const MAX_ORACLE_FACETS: usize = 8;

/// Ground-truth strong shellability by checking every facet permutation.
/// Quadratic-factorial; refuses more than [`MAX_ORACLE_FACETS`] facets.
pub fn oracle_strong_shellable(complex: &SimplicialComplex) -> Result<bool> {
    let t = complex.facet_count();
    if t > MAX_ORACLE_FACETS {
        return Err(Error::OracleTooLarge(t, MAX_ORACLE_FACETS));
    }
    for perm in (0..t).permutations(t) {
        if verify_strong_order(complex, &perm)?.is_valid() {
            return Ok(true);
        }
    }
    // Zero facets: the empty permutation (not produced above for t = 0)
    // vacuously verifies.
    Ok(t == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    /// The path complex on n vertices: facets {1,2}, {2,3}, …, {n-1,n}.
    fn path_complex(n: usize) -> SimplicialComplex {
        let lab = Labeling::numeric(n).unwrap();
        let facets: Vec<VertexSet> = (0..n - 1).map(|i| vs(&[i, i + 1])).collect();
        SimplicialComplex::new(lab, facets).unwrap()
    }

    #[test]
    fn facet_distance_basics() {
        let f = vs(&[0, 1]);
        assert_eq!(facet_distance(f, f).unwrap(), 0);
        assert_eq!(facet_distance(vs(&[0, 1]), vs(&[1, 2])).unwrap(), 1);
        assert_eq!(facet_distance(vs(&[0, 1]), vs(&[2, 3])).unwrap(), 2);
        assert!(matches!(
            facet_distance(vs(&[0]), vs(&[1, 2])),
            Err(Error::UnequalCardinalities(..))
        ));
    }

    #[test]
    fn facet_distance_is_symmetric_and_triangular_on_samples() {
        let sets = [vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[0, 3])];
        for &a in &sets {
            for &b in &sets {
                let ab = facet_distance(a, b).unwrap();
                assert_eq!(ab, facet_distance(b, a).unwrap());
                for &c in &sets {
                    let ac = facet_distance(a, c).unwrap();
                    let cb = facet_distance(c, b).unwrap();
                    assert!(ab <= ac + cb);
                }
            }
        }
    }

    #[test]
    fn path_complex_strong_shellability_boundary() {
        for n in 2..=4 {
            assert!(
                find_strong_shelling(&path_complex(n)).unwrap().is_some(),
                "path complex on {n} vertices should admit a strong shelling"
            );
        }
        for n in 5..=8 {
            assert!(
                find_strong_shelling(&path_complex(n)).unwrap().is_none(),
                "path complex on {n} vertices should not admit a strong shelling"
            );
        }
        for n in 2..=8 {
            assert!(find_shelling(&path_complex(n)).unwrap().is_some());
        }
    }

    #[test]
    fn two_triangles_sharing_a_ridge_shell() {
        let lab = Labeling::numeric(4).unwrap();
        let c = SimplicialComplex::new(lab, [vs(&[0, 1, 2]), vs(&[1, 2, 3])]).unwrap();
        let order = find_shelling(&c).unwrap().expect("shellable");
        assert!(verify_shelling_order(&c, order.order()).unwrap().is_valid());
        assert_eq!(order.status(), OrderStatus::Shelling);
    }

    #[test]
    fn disjoint_edges_are_not_shellable() {
        let lab = Labeling::numeric(4).unwrap();
        let c = SimplicialComplex::new(lab, [vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        assert!(find_shelling(&c).unwrap().is_none());
        assert!(find_strong_shelling(&c).unwrap().is_none());
        assert!(!oracle_strong_shellable(&c).unwrap());
    }

    #[test]
    fn single_facet_and_degenerate_complexes() {
        let lab = Labeling::numeric(3).unwrap();
        let single = SimplicialComplex::new(lab.clone(), [vs(&[0, 1, 2])]).unwrap();
        assert!(find_strong_shelling(&single).unwrap().is_some());
        assert!(verify_strong_order(&single, &[0]).unwrap().is_valid());

        let void = SimplicialComplex::void(lab.clone());
        let empty = SimplicialComplex::empty_complex(lab);
        for c in [void, empty] {
            let order = find_strong_shelling(&c).unwrap().expect("trivially ordered");
            assert_eq!(order.order().len(), c.facet_count());
            assert!(oracle_strong_shellable(&c).unwrap());
        }
    }

    #[test]
    fn verifier_pinpoints_first_violation() {
        // Path on 4 vertices, facets in canonical order: {1,2},{2,3},{3,4}
        // (indices 0,1,2).  Order 12,23,34 works; order 12,34,23 fails at the
        // pair of positions (0,1) because {3,4} has no admissible witness
        // against {1,2}.
        let c = path_complex(4);
        assert!(verify_strong_order(&c, &[0, 1, 2]).unwrap().is_valid());
        assert_eq!(
            verify_strong_order(&c, &[0, 2, 1]).unwrap(),
            Verified::FirstViolation {
                earlier: 0,
                later: 1
            }
        );
        assert!(matches!(
            verify_strong_order(&c, &[0, 0, 1]),
            Err(Error::NotAPermutation(3))
        ));
        assert!(matches!(
            verify_strong_order(&c, &[0, 1]),
            Err(Error::NotAPermutation(3))
        ));
    }

    #[test]
    fn strong_orders_are_shelling_orders() {
        let lab = Labeling::numeric(4).unwrap();
        let complexes = [
            path_complex(4),
            SimplicialComplex::new(lab.clone(), crate::base::k_subsets(4, 2)).unwrap(),
            SimplicialComplex::new(lab, [vs(&[0, 1, 2]), vs(&[0, 1, 3]), vs(&[0, 2, 3])]).unwrap(),
        ];
        for c in &complexes {
            let order = find_strong_shelling(c).unwrap().expect("strongly shellable");
            assert!(verify_shelling_order(c, order.order()).unwrap().is_valid());
        }
    }

    #[test]
    fn uniform_matroid_is_strongly_shellable() {
        let lab = Labeling::numeric(4).unwrap();
        let u24 = SimplicialComplex::new(lab, crate::base::k_subsets(4, 2)).unwrap();
        assert!(oracle_strong_shellable(&u24).unwrap());
        assert!(find_strong_shelling(&u24).unwrap().is_some());
    }

    #[test]
    fn oracle_matches_search_on_small_path_complexes() {
        for n in 2..=7 {
            let c = path_complex(n);
            assert_eq!(
                oracle_strong_shellable(&c).unwrap(),
                find_strong_shelling(&c).unwrap().is_some(),
                "disagreement at n = {n}"
            );
        }
    }

    #[test]
    fn oracle_refuses_large_inputs() {
        let lab = Labeling::numeric(6).unwrap();
        let c = SimplicialComplex::new(lab, crate::base::k_subsets(6, 2)).unwrap();
        assert_eq!(c.facet_count(), 15);
        assert!(matches!(
            oracle_strong_shellable(&c),
            Err(Error::OracleTooLarge(15, 8))
        ));
    }

    #[test]
    fn codim_one_graph_shapes() {
        let c = path_complex(3);
        let g = codim_one_graph(&c).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.universe().labels(), &["{1,2}", "{2,3}"]);

        let lab = Labeling::numeric(4).unwrap();
        let disjoint = SimplicialComplex::new(lab.clone(), [vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        let g = codim_one_graph(&disjoint).unwrap();
        assert_eq!(g.edge_count(), 0);

        let impure = SimplicialComplex::new(lab, [vs(&[0, 1]), vs(&[2])]).unwrap();
        assert!(matches!(codim_one_graph(&impure), Err(Error::NotPure(..))));
    }

    #[test]
    fn facet_order_render_uses_labels() {
        let c = path_complex(3);
        let order = find_strong_shelling(&c).unwrap().unwrap();
        assert_eq!(order.render(), "{1,2} < {2,3}");
        assert_eq!(order.status(), OrderStatus::StrongShelling);
    }
}
