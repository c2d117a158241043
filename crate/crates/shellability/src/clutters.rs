//! Clutter operations — deletion, contraction, minors, complements,
//! non-edges, independence complexes — and the two clutter-level
//! chordality notions: the minor-based one (every minor has a simplicial
//! vertex) and the elimination-order one (uniform clutters admitting a
//! perfect elimination order into complete neighborhoods).

use std::collections::{HashSet, VecDeque};

use crate::base::{
    k_subsets, minimal_sets, minimal_transversals, Clutter, Labeling, SimplicialComplex, VertexSet,
};
use crate::error::{Error, Result};
use crate::shelling::search::lex_least_order;

/// How a vertex is removed from a clutter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalMode {
    /// Keep only the edges avoiding the vertex.
    Delete,
    /// Strip the vertex from every edge, then keep the minimal results.
    Contract,
}

/// Remove a vertex from a clutter.  The universe shrinks to the remaining
/// vertices (rank-preserving re-indexing).
///
/// Deleting keeps the `v`-free edges.  Contracting maps every edge `e` to
/// `e ∖ {v}` and keeps the inclusion-minimal results; contracting a vertex
/// that forms a singleton edge therefore yields the degenerate clutter
/// `{∅}`.
pub fn remove_vertex(clutter: &Clutter, v: usize, mode: RemovalMode) -> Result<Clutter> {
    let universe = clutter.universe();
    universe.check_vertex(v)?;
    let keep = universe.full_set().remove(v);
    let sub_universe = universe.restrict(keep);
    let edges: Vec<VertexSet> = match mode {
        RemovalMode::Delete => clutter
            .edges()
            .iter()
            .filter(|e| !e.contains(v))
            .map(|&e| e.compress_into(keep))
            .collect(),
        RemovalMode::Contract => {
            let stripped: Vec<VertexSet> =
                clutter.edges().iter().map(|&e| e.remove(v)).collect();
            minimal_sets(&stripped)
                .into_iter()
                .map(|e| e.compress_into(keep))
                .collect()
        }
    };
    Ok(Clutter::from_antichain(sub_universe, edges))
}

/// The subclutter induced on `U`: all edges lying entirely in `U`, on the
/// universe restricted to `U`.
pub fn induced_subclutter(clutter: &Clutter, u: VertexSet) -> Result<Clutter> {
    clutter.universe().check_set(u)?;
    let edges: Vec<VertexSet> = clutter
        .edges()
        .iter()
        .filter(|e| e.is_subset_of(u))
        .map(|&e| e.compress_into(u))
        .collect();
    Ok(Clutter::from_antichain(
        clutter.universe().restrict(u),
        edges,
    ))
}

/// The vertex-complement clutter: every edge `e` is replaced by `V ∖ e`.
/// Defined for uniform clutters (so the results form an antichain); an
/// edgeless clutter maps to itself, the degenerate clutter to `{V}`.
/// An involution.
pub fn vertex_complement(clutter: &Clutter) -> Result<Clutter> {
    if clutter.is_edgeless() {
        return Ok(clutter.clone());
    }
    require_uniform(clutter)?;
    let full = clutter.universe().full_set();
    let edges: Vec<VertexSet> = clutter.edges().iter().map(|&e| full.minus(e)).collect();
    Ok(Clutter::from_antichain(clutter.universe().clone(), edges))
}

fn require_uniform(clutter: &Clutter) -> Result<usize> {
    match clutter.uniformity() {
        Some(d) => Ok(d),
        None => {
            let edges = clutter.edges();
            let first = edges[0];
            let other = edges
                .iter()
                .copied()
                .find(|e| e.len() != first.len())
                .expect("non-uniform clutter has edges of different sizes");
            Err(Error::NotUniform(
                clutter.universe().render_set(first),
                clutter.universe().render_set(other),
            ))
        }
    }
}

/// The clutter of `d`-non-edges `c_d(C)`: all `d`-subsets of the universe
/// that are not edges of `C`.
pub fn d_nonedges(clutter: &Clutter, d: usize) -> Result<Clutter> {
    if d == 0 {
        return Err(Error::CardinalityTooSmall);
    }
    let edges: Vec<VertexSet> = k_subsets(clutter.universe().len(), d)
        .into_iter()
        .filter(|e| !clutter.edges().contains(e))
        .collect();
    Ok(Clutter::from_antichain(clutter.universe().clone(), edges))
}

/// The independence complex: faces are the subsets containing no edge.
/// Its facets are the complements of the minimal transversals.  The
/// edgeless clutter gives the full simplex; the degenerate clutter `{∅}`
/// gives the void complex (nothing avoids the empty edge).
pub fn independence_complex(clutter: &Clutter) -> SimplicialComplex {
    let full = clutter.universe().full_set();
    let facets: Vec<VertexSet> = minimal_transversals(clutter.edges())
        .into_iter()
        .map(|t| full.minus(t))
        .collect();
    SimplicialComplex::new(clutter.universe().clone(), facets)
        .expect("complements of transversals stay in the universe")
}

/// Is `v` simplicial in `C`: for every pair of distinct edges `e₁, e₂`
/// containing `v` there is a third edge `e₃ ⊆ (e₁ ∪ e₂) ∖ {v}`?
/// Vacuously true when `v` lies in at most one edge.
pub fn is_simplicial_vertex(clutter: &Clutter, v: usize) -> Result<bool> {
    clutter.universe().check_vertex(v)?;
    let incident = clutter.edges_at(v);
    for (a, &e1) in incident.iter().enumerate() {
        for &e2 in incident.iter().skip(a + 1) {
            let bound = e1.union(e2).remove(v);
            let found = clutter.edges().iter().any(|e3| e3.is_subset_of(bound));
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A replayable record of how a minor was reached: which vertices of the
/// original universe were deleted and contracted, and in what order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    deleted: VertexSet,
    contracted: VertexSet,
    sequence: Vec<(RemovalMode, String)>,
}

impl MinorSpec {
    fn root() -> MinorSpec {
        MinorSpec {
            deleted: VertexSet::EMPTY,
            contracted: VertexSet::EMPTY,
            sequence: Vec::new(),
        }
    }

    fn extended(&self, mode: RemovalMode, original_index: usize, label: &str) -> MinorSpec {
        let mut next = self.clone();
        match mode {
            RemovalMode::Delete => next.deleted = next.deleted.insert(original_index),
            RemovalMode::Contract => next.contracted = next.contracted.insert(original_index),
        }
        next.sequence.push((mode, label.to_string()));
        next
    }

    /// Vertices of the *original* universe removed by deletion.
    pub fn deleted(&self) -> VertexSet {
        self.deleted
    }

    /// Vertices of the *original* universe removed by contraction.
    pub fn contracted(&self) -> VertexSet {
        self.contracted
    }

    /// The removal steps in order, by original vertex label.
    pub fn sequence(&self) -> &[(RemovalMode, String)] {
        &self.sequence
    }

    /// Apply the recorded steps to a clutter (normally the original one).
    pub fn replay(&self, clutter: &Clutter) -> Result<Clutter> {
        let mut current = clutter.clone();
        for (mode, label) in &self.sequence {
            let v = current.universe().index_of(label)?;
            current = remove_vertex(&current, v, *mode)?;
        }
        Ok(current)
    }
}

/// Outcome of the minor-based chordality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WChordality {
    /// Every minor has a simplicial vertex.
    Chordal,
    /// A concrete minor with no simplicial vertex, plus how to reach it.
    NotChordal { minor: Clutter, how: MinorSpec },
}

impl WChordality {
    pub fn holds(&self) -> bool {
        matches!(self, WChordality::Chordal)
    }
}

/// Maximum universe size accepted by [`is_w_chordal`].
pub const MAX_MINOR_UNIVERSE: usize = 10;

/// Minor-based chordality: does every minor of `C` (including `C` itself)
/// have a simplicial vertex?
///
/// Explores the minor space breadth-first, memoizing on the normalized
/// form (universe size plus re-indexed edge bitsets), so the work is
/// bounded by the number of structurally distinct minors.  Minors that are
/// edgeless, degenerate, or have an empty universe satisfy the condition
/// vacuously and are not expanded further.
pub fn is_w_chordal(clutter: &Clutter) -> Result<WChordality> {
    let n = clutter.universe().len();
    if n > MAX_MINOR_UNIVERSE {
        return Err(Error::MinorSpaceTooLarge(n, MAX_MINOR_UNIVERSE));
    }

    let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
    let mut queue: VecDeque<(Clutter, MinorSpec)> = VecDeque::new();
    queue.push_back((clutter.clone(), MinorSpec::root()));
    seen.insert(normal_form(clutter));

    while let Some((current, spec)) = queue.pop_front() {
        if skip_minor(&current) {
            continue;
        }
        let has_simplicial = (0..current.universe().len())
            .any(|v| is_simplicial_vertex(&current, v).expect("vertex is in range"));
        if !has_simplicial {
            return Ok(WChordality::NotChordal {
                minor: current,
                how: spec,
            });
        }
        for v in 0..current.universe().len() {
            let label = current.universe().label(v).to_string();
            let original_index = clutter.universe().index_of(&label)?;
            for mode in [RemovalMode::Delete, RemovalMode::Contract] {
                let child = remove_vertex(&current, v, mode)?;
                if seen.insert(normal_form(&child)) {
                    let child_spec = spec.extended(mode, original_index, &label);
                    queue.push_back((child, child_spec));
                }
            }
        }
    }
    Ok(WChordality::Chordal)
}

/// Minors with no pair of edges to test: simplicial-vertex requirements
/// hold vacuously and no further minor can break them.
fn skip_minor(clutter: &Clutter) -> bool {
    clutter.universe().is_empty() || clutter.is_edgeless() || clutter.is_degenerate()
}

fn normal_form(clutter: &Clutter) -> (usize, Vec<u64>) {
    let mut bits: Vec<u64> = clutter.edges().iter().map(|e| e.bits()).collect();
    bits.sort_unstable();
    (clutter.universe().len(), bits)
}

/// Perfect elimination order for a uniform clutter: a vertex order
/// `x_1, …, x_n` such that at every step the subclutter induced on the
/// closed neighborhood of `x_i` *within the remaining tail* is a complete
/// `d`-uniform clutter, or else `x_i` lies in no remaining edge.
///
/// Returns the lexicographically least such order (preferring a first
/// vertex that still lies in an edge, which always exists when the clutter
/// has edges and any order exists), or `None` after exhausting the search.
pub fn e_chordal_peo(clutter: &Clutter) -> Result<Option<Vec<usize>>> {
    let n = clutter.universe().len();
    let d = match clutter.uniformity() {
        Some(d) => d,
        None if clutter.is_edgeless() => {
            // No edges: every vertex is isolated and any order works.
            return Ok(Some((0..n).collect()));
        }
        None => return Err(require_uniform(clutter).unwrap_err()),
    };
    if d == 0 {
        // Degenerate clutter: no vertex lies in the empty edge, so all
        // vertices are isolated.
        return Ok(Some((0..n).collect()));
    }
    let edges = clutter.edges().to_vec();
    let full = clutter.universe().full_set();

    let eligible = move |x: usize, chosen: u128| -> bool {
        let mut tail = full;
        let mut mask = chosen;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            tail = tail.remove(v);
        }
        let tail_edges: Vec<VertexSet> =
            edges.iter().copied().filter(|e| e.is_subset_of(tail)).collect();
        let mut closed = VertexSet::singleton(x);
        let mut incident = 0usize;
        for &e in &tail_edges {
            if e.contains(x) {
                closed = closed.union(e);
                incident += 1;
            }
        }
        if incident == 0 {
            return true;
        }
        let m = closed.len();
        let inside = tail_edges.iter().filter(|e| e.is_subset_of(closed)).count();
        inside as u128 == binomial(m, d)
    };

    let with_edges: Vec<usize> = (0..n)
        .filter(|&v| clutter.edges().iter().any(|e| e.contains(v)))
        .collect();
    let preferred = if with_edges.is_empty() {
        None
    } else {
        Some(with_edges)
    };
    Ok(lex_least_order(n, preferred.as_deref(), |x, chosen| {
        eligible(x, chosen)
    }))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The complete `d`-uniform clutter on `n` vertices: every `d`-subset is an
/// edge.  When `n < d` there are no `d`-subsets and the result is edgeless
/// (`n` isolated points); when `d = 0` the single edge is `∅`.
pub fn complete_clutter(n: usize, d: usize) -> Result<Clutter> {
    let universe = Labeling::numeric(n)?;
    if d == 0 {
        return Ok(Clutter::degenerate(universe));
    }
    Ok(Clutter::from_antichain(universe, k_subsets(n, d)))
}

/// The layered transversal matroid complex on disjoint vertex sets `X` and
/// `Y`: facets are all unions `X′ ∪ Y′` with `|X′| = k`, `|Y′| = λ − k`
/// for `k` ranging over `i..=j`.  Requires
/// `max(0, λ − |Y|) ≤ i ≤ j ≤ min(λ, |X|)` and `λ ≥ 1`; the output is a
/// pure `(λ−1)`-dimensional complex.
pub fn layered_matroid(
    universe: &Labeling,
    x: VertexSet,
    y: VertexSet,
    lambda: usize,
    i: usize,
    j: usize,
) -> Result<SimplicialComplex> {
    universe.check_set(x)?;
    universe.check_set(y)?;
    if x.intersects(y) {
        return Err(Error::SetsNotDisjoint(
            universe.render_set(x.intersection(y)),
        ));
    }
    if lambda == 0 {
        return Err(Error::CardinalityTooSmall);
    }
    let lower = lambda.saturating_sub(y.len());
    let upper = lambda.min(x.len());
    if !(lower <= i && i <= j && j <= upper) {
        return Err(Error::LayerIndices {
            lambda,
            i,
            j,
            x_size: x.len(),
            y_size: y.len(),
        });
    }
    let mut facets = Vec::new();
    for k in i..=j {
        for xp in subsets_of_size(x, k) {
            for yp in subsets_of_size(y, lambda - k) {
                facets.push(xp.union(yp));
            }
        }
    }
    SimplicialComplex::new(universe.clone(), facets)
}

/// All subsets of `set` with exactly `k` elements.
fn subsets_of_size(set: VertexSet, k: usize) -> Vec<VertexSet> {
    let members: Vec<usize> = set.iter().collect();
    k_subsets(members.len(), k)
        .into_iter()
        .map(|pattern| VertexSet::from_indices(pattern.iter().map(|p| members[p])))
        .collect()
}
