//! Bitset representation of vertex subsets, plus small set-system utilities.

use std::cmp::Ordering;

/// Maximum number of vertices a universe may hold: one machine word keeps
/// all set algebra branch-free.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of a vertex universe of size at most [`MAX_UNIVERSE`], stored as
/// a bit mask.  Bit `i` corresponds to the vertex with 0-based index `i` in
/// the governing [`Labeling`](crate::Labeling).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Set containing the single vertex `index`.
    pub fn singleton(index: usize) -> VertexSet {
        debug_assert!(index < MAX_UNIVERSE);
        VertexSet(1 << index)
    }

    /// Set of all vertices of a universe of size `n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// Build a set from 0-based vertex indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for i in indices {
            s = s.insert(i);
        }
        s
    }

    /// Raw bit mask.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Build directly from a bit mask.
    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_UNIVERSE && self.0 & (1 << index) != 0
    }

    #[must_use]
    pub fn insert(self, index: usize) -> VertexSet {
        debug_assert!(index < MAX_UNIVERSE);
        VertexSet(self.0 | (1 << index))
    }

    #[must_use]
    pub fn remove(self, index: usize) -> VertexSet {
        debug_assert!(index < MAX_UNIVERSE);
        VertexSet(self.0 & !(1 << index))
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    #[must_use]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within a universe of size `n`.
    #[must_use]
    pub fn complement_within(self, n: usize) -> VertexSet {
        VertexSet::full(n).minus(self)
    }

    /// The smallest vertex index in the set, if any.
    pub fn min_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate over the 0-based vertex indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Re-index this set into the sub-universe consisting of the vertices of
    /// `keep`, which must contain `self`.  Vertex ranks are preserved: the
    /// `k`-th smallest member of `keep` becomes index `k`.
    #[must_use]
    pub fn compress_into(self, keep: VertexSet) -> VertexSet {
        debug_assert!(self.is_subset_of(keep));
        let mut out = 0u64;
        let mut rank = 0usize;
        for v in keep.iter() {
            if self.contains(v) {
                out |= 1 << rank;
            }
            rank += 1;
        }
        VertexSet(out)
    }

    /// Total order used everywhere a deterministic arrangement of sets is
    /// needed: larger sets first, ties broken by ascending bit pattern.
    pub fn canonical_cmp(self, other: VertexSet) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexSet{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Sort sets into the canonical arrangement (size descending, bits ascending).
pub fn sort_canonically(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
}

/// All `k`-subsets of `{0, …, n-1}`, in ascending bit-pattern order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    assert!(n <= MAX_UNIVERSE);
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![VertexSet::EMPTY];
    }
    // Gosper's hack enumerates fixed-popcount masks in increasing order.
    let mut out = Vec::new();
    let limit: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut v: u64 = (1u64 << k) - 1;
    while v <= limit {
        out.push(VertexSet(v));
        let c = v & v.wrapping_neg();
        let r = v + c;
        if r == 0 {
            break;
        }
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// Inclusion-maximal members of a family, deduplicated, canonically sorted.
pub fn maximal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for &s in sets {
        if out.iter().any(|&t| s.is_subset_of(t)) {
            continue;
        }
        out.retain(|&t| !t.is_subset_of(s));
        out.push(s);
    }
    sort_canonically(&mut out);
    out
}

/// Inclusion-minimal members of a family, deduplicated, canonically sorted.
pub fn minimal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for &s in sets {
        if out.iter().any(|&t| t.is_subset_of(s)) {
            continue;
        }
        out.retain(|&t| !s.is_subset_of(t));
        out.push(s);
    }
    sort_canonically(&mut out);
    out
}

/// All inclusion-minimal sets that intersect every member of `edges`
/// (minimal transversals), computed by iterated cross-multiplication with
/// minimalization after every step.
///
/// Conventions: with no edges the empty set is the unique minimal
/// transversal (`[∅]`); if some edge is empty, no transversal exists (`[]`).
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut partial: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for &edge in edges {
        if edge.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<VertexSet> = Vec::new();
        for &t in &partial {
            if t.intersects(edge) {
                next.push(t);
            } else {
                for v in edge.iter() {
                    next.push(t.insert(v));
                }
            }
        }
        partial = minimal_sets(&next);
    }
    partial
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    #[test]
    fn set_algebra_is_exact() {
        let a = vs(&[0, 2, 5]);
        let b = vs(&[2, 3]);
        assert_eq!(a.union(b), vs(&[0, 2, 3, 5]));
        assert_eq!(a.intersection(b), vs(&[2]));
        assert_eq!(a.minus(b), vs(&[0, 5]));
        assert!(vs(&[2]).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.complement_within(6), vs(&[1, 3, 4]));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
    }

    #[test]
    fn full_universe_boundaries() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(3), vs(&[0, 1, 2]));
    }

    #[test]
    fn compress_preserves_rank() {
        let keep = vs(&[1, 3, 4, 6]);
        assert_eq!(vs(&[3, 6]).compress_into(keep), vs(&[1, 3]));
        assert_eq!(VertexSet::EMPTY.compress_into(keep), VertexSet::EMPTY);
    }

    #[test]
    fn canonical_order_is_size_desc_then_bits_asc() {
        let mut sets = vec![vs(&[1]), vs(&[0, 2]), vs(&[0]), vs(&[0, 1])];
        sort_canonically(&mut sets);
        assert_eq!(sets, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[0]), vs(&[1])]);
    }

    #[test]
    fn k_subsets_counts_match_binomials() {
        assert_eq!(k_subsets(5, 2).len(), 10);
        assert_eq!(k_subsets(5, 0), vec![VertexSet::EMPTY]);
        assert_eq!(k_subsets(3, 4), Vec::<VertexSet>::new());
        assert_eq!(k_subsets(4, 4), vec![vs(&[0, 1, 2, 3])]);
        // Ascending bit patterns.
        let two_of_three = k_subsets(3, 2);
        assert_eq!(two_of_three, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
    }

    #[test]
    fn maximal_and_minimal_families() {
        let family = [vs(&[0, 1]), vs(&[0]), vs(&[1, 2]), vs(&[0, 1])];
        assert_eq!(maximal_sets(&family), vec![vs(&[0, 1]), vs(&[1, 2])]);
        // Canonical order: larger sets first.
        assert_eq!(minimal_sets(&family), vec![vs(&[1, 2]), vs(&[0])]);
    }

    #[test]
    fn transversals_of_a_four_cycle() {
        // Edges of the 4-cycle 0-1-2-3: minimal vertex covers are the two
        // diagonals plus the two adjacent pairs, i.e. {0,2}, {1,3} only.
        let edges = [vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[0, 3])];
        let t = minimal_transversals(&edges);
        assert_eq!(t, vec![vs(&[0, 2]), vs(&[1, 3])]);
    }

    #[test]
    fn transversal_conventions() {
        assert_eq!(minimal_transversals(&[]), vec![VertexSet::EMPTY]);
        assert_eq!(
            minimal_transversals(&[vs(&[0]), VertexSet::EMPTY]),
            Vec::<VertexSet>::new()
        );
    }
}
