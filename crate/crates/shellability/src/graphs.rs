//! Graph-level theory: complements, chordality with perfect elimination
//! orders (PEO), the constructive translation from a PEO of the complement
//! to a strong shelling of the edge complex, quotient graphs, blow-ups,
//! vertex expansions, and metric utilities.
//!
//! A graph `G` is *edgewise strongly shellable* (ESS) when the
//! one-dimensional complex whose facets are the edges of `G` is strongly
//! shellable; this happens exactly when the complement graph is chordal.

use crate::base::{Graph, Labeling, SimplicialComplex, VertexSet};
use crate::complexes::expand;
use crate::error::{Error, Result};
use crate::shelling::{verify_strong_order, FacetOrder, OrderStatus, Verified};

/// The complement graph: same vertices, exactly the missing edges.
pub fn complement_graph(graph: &Graph) -> Graph {
    let n = graph.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !graph.has_edge(u, v) {
                edges.push(VertexSet::from_indices([u, v]));
            }
        }
    }
    Graph::from_dedup_edges(graph.universe().clone(), edges)
}

/// The one-dimensional complex whose facet set is the edge set of the
/// graph.  An edgeless graph yields the void complex.
pub fn edge_complex(graph: &Graph) -> SimplicialComplex {
    SimplicialComplex::new(graph.universe().clone(), graph.edges().to_vec())
        .expect("graph edges are valid faces")
}

/// A perfect elimination order: at each position, the later neighbors of
/// the vertex form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peo {
    graph: Graph,
    order: Vec<usize>,
}

impl Peo {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex indices in elimination order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Render as a label sequence `a, b, c`.
    pub fn render(&self) -> String {
        self.order
            .iter()
            .map(|&v| self.graph.universe().label(v).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Outcome of the chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeoOutcome {
    Peo(Peo),
    /// A chordless cycle of length ≥ 4, as its vertex sequence.
    NotChordal { cycle: Vec<usize> },
}

impl PeoOutcome {
    pub fn is_chordal(&self) -> bool {
        matches!(self, PeoOutcome::Peo(_))
    }
}

/// Is `order` a perfect elimination order of the graph?
pub fn is_perfect_elimination_order(graph: &Graph, order: &[usize]) -> Result<bool> {
    check_vertex_permutation(graph, order)?;
    Ok(first_peo_violation(graph, order).is_none())
}

fn check_vertex_permutation(graph: &Graph, order: &[usize]) -> Result<()> {
    let n = graph.vertex_count();
    if order.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation(n));
        }
        seen[v] = true;
    }
    Ok(())
}

/// First violation of the elimination condition: a vertex `v` with two
/// non-adjacent later neighbors `a`, `b`.
fn first_peo_violation(graph: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut later = graph.universe().full_set();
    for &v in order {
        later = later.remove(v);
        let tail_neighbors: Vec<usize> = graph.neighbors(v).intersection(later).iter().collect();
        for (i, &a) in tail_neighbors.iter().enumerate() {
            for &b in tail_neighbors.iter().skip(i + 1) {
                if !graph.has_edge(a, b) {
                    return Some((v, a, b));
                }
            }
        }
    }
    None
}

/// Test chordality.  A maximum-cardinality-search order is computed (pick
/// the unvisited vertex with the most visited neighbors, ties to the least
/// index; the elimination order is the reverse of the pick order) and
/// verified against the clique condition; if verification fails, a
/// chordless cycle of length ≥ 4 is extracted as the witness.
pub fn find_peo(graph: &Graph) -> PeoOutcome {
    let n = graph.vertex_count();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut pick_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unpicked vertex remains");
        picked[v] = true;
        pick_order.push(v);
        for u in graph.neighbors(v).iter() {
            if !picked[u] {
                weight[u] += 1;
            }
        }
    }
    pick_order.reverse();
    let order = pick_order;
    if first_peo_violation(graph, &order).is_none() {
        PeoOutcome::Peo(Peo {
            graph: graph.clone(),
            order,
        })
    } else {
        let cycle = chordless_cycle(graph)
            .expect("a graph whose MCS order fails the clique condition has a chordless cycle");
        PeoOutcome::NotChordal { cycle }
    }
}

/// Find a chordless cycle of length ≥ 4 in a non-chordal graph.
///
/// Scans triples `(v, a, b)` with `a, b` non-adjacent neighbors of `v` in
/// canonical order and looks for a shortest `a`–`b` path avoiding
/// `N[v] ∖ {a, b}`; the path interior is non-adjacent to `v` and the path
/// is induced, so closing it through `v` gives a chordless cycle.  For a
/// chordless cycle `v, a, …, b` in the graph the triple `(v, a, b)`
/// succeeds, so the scan is exhaustive for non-chordal inputs.
fn chordless_cycle(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    for v in 0..n {
        let nb: Vec<usize> = graph.neighbors(v).iter().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in nb.iter().skip(i + 1) {
                if graph.has_edge(a, b) {
                    continue;
                }
                let banned = graph.closed_neighbors(v).remove(a).remove(b);
                let keep = graph.universe().full_set().minus(banned);
                let sub = graph.induced(keep).expect("keep is within the universe");
                let sa = a_compressed(keep, a);
                let sb = a_compressed(keep, b);
                if let Some(path) = sub.shortest_path(sa, sb) {
                    let members: Vec<usize> = keep.iter().collect();
                    let mut cycle = vec![v];
                    cycle.extend(path.into_iter().map(|p| members[p]));
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn a_compressed(keep: VertexSet, v: usize) -> usize {
    VertexSet::singleton(v)
        .compress_into(keep)
        .min_index()
        .expect("v is kept")
}

/// Sort the edges of `g` into a strong shelling order derived from a
/// perfect elimination order `peo` of the *complement* of `g`: ascending
/// by (position of the later endpoint, position of the earlier endpoint).
/// The constructed order is re-verified on every call; a verification
/// failure is a hard error because it would contradict the theorem this
/// construction implements.
pub fn strong_shelling_from_peo(g: &Graph, peo: &[usize]) -> Result<FacetOrder> {
    let complement = complement_graph(g);
    if !is_perfect_elimination_order(&complement, peo)? {
        return Err(Error::NotAnEliminationOrder);
    }
    let mut position = vec![0usize; g.vertex_count()];
    for (p, &v) in peo.iter().enumerate() {
        position[v] = p;
    }
    let complex = edge_complex(g);
    let key = |facet: VertexSet| {
        let mut it = facet.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        let (pu, pv) = (position[u], position[v]);
        (pu.max(pv), pu.min(pv))
    };
    let mut order: Vec<usize> = (0..complex.facet_count()).collect();
    order.sort_by_key(|&i| key(complex.facets()[i]));
    match verify_strong_order(&complex, &order)? {
        Verified::Valid => Ok(FacetOrder::with_status(
            complex,
            order,
            OrderStatus::StrongShelling,
        )),
        Verified::FirstViolation { earlier, later } => {
            Err(Error::ConstructionFailed(earlier, later))
        }
    }
}

/// Decide the ESS property constructively: compute a PEO of the complement
/// and translate it into a strong shelling of the edge complex.  Returns
/// `Ok(None)` when the complement is not chordal (equivalently, when no
/// strong shelling exists).
pub fn peo_to_strong_shelling(g: &Graph) -> Result<Option<FacetOrder>> {
    match find_peo(&complement_graph(g)) {
        PeoOutcome::Peo(peo) => strong_shelling_from_peo(g, peo.order()).map(Some),
        PeoOutcome::NotChordal { .. } => Ok(None),
    }
}

/// Is the graph edgewise strongly shellable?  Fast path: the constructive
/// criterion through the complement's PEO.
pub fn is_ess_graph(g: &Graph) -> Result<Option<FacetOrder>> {
    peo_to_strong_shelling(g)
}

/// A vertex map onto a smaller label set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    target: Labeling,
    /// `map[v]` = target index of source vertex `v`.
    map: Vec<usize>,
}

impl QuotientMap {
    pub fn new(target: Labeling, map: Vec<usize>) -> Result<QuotientMap> {
        for &t in &map {
            target.check_vertex(t)?;
        }
        Ok(QuotientMap { target, map })
    }

    pub fn target(&self) -> &Labeling {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The fiber over a target vertex, as a set of source vertices.
    pub fn fiber(&self, t: usize) -> VertexSet {
        VertexSet::from_indices(
            self.map
                .iter()
                .enumerate()
                .filter(|&(_, &img)| img == t)
                .map(|(v, _)| v),
        )
    }
}

/// A quotient graph plus whether the map was proper (every fiber
/// independent in the source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub graph: Graph,
    pub proper: bool,
}

/// The quotient of `g` under a surjective vertex map: edges are the images
/// of edges with distinct endpoint images.
pub fn quotient_graph(g: &Graph, map: &QuotientMap) -> Result<QuotientResult> {
    if map.map().len() != g.vertex_count() {
        return Err(Error::QuotientLengthMismatch(
            map.map().len(),
            g.vertex_count(),
        ));
    }
    for t in 0..map.target().len() {
        if map.fiber(t).is_empty() {
            return Err(Error::QuotientNotSurjective(
                map.target().label(t).to_string(),
            ));
        }
    }
    let mut edges = Vec::new();
    let mut proper = true;
    for &e in g.edges() {
        let mut it = e.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        let (iu, iv) = (map.map()[u], map.map()[v]);
        if iu == iv {
            proper = false;
        } else {
            edges.push(VertexSet::from_indices([iu, iv]));
        }
    }
    Ok(QuotientResult {
        graph: Graph::from_dedup_edges(map.target().clone(), edges),
        proper,
    })
}

/// Replace vertex `v` by `m ≥ 1` pairwise non-adjacent clones with the
/// same outside neighborhood.  Clone labels are `L_1, …, L_m` for original
/// label `L`, inserted at `v`'s position.
pub fn blow_up(g: &Graph, v: usize, m: usize) -> Result<Graph> {
    g.universe().check_vertex(v)?;
    if m == 0 {
        return Err(Error::MultiplicityTooSmall);
    }
    let n = g.vertex_count();
    let new_size = n - 1 + m;
    if new_size > crate::base::MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge(new_size, crate::base::MAX_UNIVERSE));
    }
    let mut labels: Vec<String> = Vec::with_capacity(new_size);
    for u in 0..n {
        if u == v {
            let base = g.universe().label(v);
            labels.extend((1..=m).map(|j| format!("{base}_{j}")));
        } else {
            labels.push(g.universe().label(u).to_string());
        }
    }
    let universe = Labeling::new(labels)?;
    let reindex = |u: usize| -> usize {
        if u < v {
            u
        } else {
            u + m - 1
        }
    };
    let mut edges = Vec::new();
    for &e in g.edges() {
        let mut it = e.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        match (a == v, b == v) {
            (false, false) => edges.push(VertexSet::from_indices([reindex(a), reindex(b)])),
            (true, false) => {
                edges.extend((0..m).map(|j| VertexSet::from_indices([v + j, reindex(b)])));
            }
            (false, true) => {
                edges.extend((0..m).map(|j| VertexSet::from_indices([reindex(a), v + j])));
            }
            (true, true) => unreachable!("simple graphs have no loops"),
        }
    }
    Ok(Graph::from_dedup_edges(universe, edges))
}

/// The vertex expansion of a graph: each vertex `i` becomes a clique of
/// `s_i` clones `x_{i,j}`, and clones of adjacent vertices are adjacent.
/// Computed through the complement route: expand the edge complex of the
/// complement (which has no fiber-internal edges) and complement again, so
/// fiber cliques appear exactly where the complement expansion is silent.
pub fn expand_graph(g: &Graph, s: &[usize]) -> Result<Graph> {
    let complement_edges = expand(&edge_complex(&complement_graph(g)), s)?;
    let expanded = complement_edges.expanded();
    let expanded_graph = Graph::from_dedup_edges(
        expanded.universe().clone(),
        expanded.facets().to_vec(),
    );
    Ok(complement_graph(&expanded_graph))
}

/// Convenience wrapper: is the graph chordal?
pub fn is_chordal(g: &Graph) -> bool {
    find_peo(g).is_chordal()
}

/// Number of edges on a shortest path, if any.
pub fn distance(g: &Graph, a: usize, b: usize) -> Result<Option<usize>> {
    g.universe().check_vertex(a)?;
    g.universe().check_vertex(b)?;
    Ok(g.bfs_distances(a)[b])
}

/// Largest pairwise distance; `None` when some pair is unreachable or the
/// graph has no vertices.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut max = 0usize;
    for a in 0..n {
        let dist = g.bfs_distances(a);
        for d in dist {
            max = max.max(d?);
        }
    }
    Some(max)
}

/// The line graph: one vertex per edge (labeled by the rendered edge),
/// adjacency iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let labels: Vec<String> = g
        .edges()
        .iter()
        .map(|&e| g.universe().render_set(e))
        .collect();
    let universe = Labeling::new(labels).expect("distinct edges render distinctly");
    let mut edges = Vec::new();
    for i in 0..g.edge_count() {
        for j in (i + 1)..g.edge_count() {
            if g.edges()[i].intersects(g.edges()[j]) {
                edges.push(VertexSet::from_indices([i, j]));
            }
        }
    }
    Graph::from_dedup_edges(universe, edges)
}

/// Distance between two edges, measured in the line graph.  Edge arguments
/// are indices into [`Graph::edges`].
pub fn edge_distance(g: &Graph, e: usize, f: usize) -> Result<Option<usize>> {
    let m = g.edge_count();
    if e >= m {
        return Err(Error::VertexOutOfRange(e, m));
    }
    if f >= m {
        return Err(Error::VertexOutOfRange(f, m));
    }
    Ok(line_graph(g).bfs_distances(e)[f])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::find_strong_shelling;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    fn graph(n: usize, edges: &[&[usize]]) -> Graph {
        let lab = Labeling::numeric(n).unwrap();
        Graph::new(lab, edges.iter().map(|e| vs(e))).unwrap()
    }

    fn c4() -> Graph {
        graph(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])
    }

    fn path(n: usize) -> Graph {
        let lab = Labeling::numeric(n).unwrap();
        let edges: Vec<VertexSet> = (0..n - 1).map(|i| vs(&[i, i + 1])).collect();
        Graph::new(lab, edges).unwrap()
    }

    #[test]
    fn complement_examples() {
        let comp = complement_graph(&c4());
        assert_eq!(comp.edges(), &[vs(&[0, 2]), vs(&[1, 3])]);
        assert_eq!(complement_graph(&comp), c4());
        let k4 = Graph::complete(Labeling::numeric(4).unwrap());
        assert_eq!(complement_graph(&k4).edge_count(), 0);
    }

    #[test]
    fn peo_examples() {
        assert!(find_peo(&path(4)).is_chordal());

        match find_peo(&c4()) {
            PeoOutcome::NotChordal { cycle } => {
                assert_eq!(cycle.len(), 4);
                // The witness is a genuine cycle: consecutive vertices
                // adjacent, non-consecutive not.
                let g = c4();
                for i in 0..cycle.len() {
                    let j = (i + 1) % cycle.len();
                    assert!(g.has_edge(cycle[i], cycle[j]));
                }
                assert!(!g.has_edge(cycle[0], cycle[2]));
                assert!(!g.has_edge(cycle[1], cycle[3]));
            }
            PeoOutcome::Peo(_) => panic!("C₄ is not chordal"),
        }

        // C₅ plus the chord 1-3 still contains the chordless cycle 1-3-4-5.
        let c5_chord = graph(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4], &[0, 2]]);
        match find_peo(&c5_chord) {
            PeoOutcome::NotChordal { cycle } => assert_eq!(cycle.len(), 4),
            PeoOutcome::Peo(_) => panic!("chordless 4-cycle remains"),
        }
    }

    #[test]
    fn chordless_witness_on_larger_cycles() {
        let lab = Labeling::numeric(6).unwrap();
        let edges: Vec<VertexSet> = (0..6).map(|i| vs(&[i, (i + 1) % 6])).collect();
        let c6 = Graph::new(lab, edges).unwrap();
        match find_peo(&c6) {
            PeoOutcome::NotChordal { cycle } => {
                assert_eq!(cycle.len(), 6);
                for i in 0..6 {
                    assert!(c6.has_edge(cycle[i], cycle[(i + 1) % 6]));
                }
            }
            PeoOutcome::Peo(_) => panic!("C₆ is not chordal"),
        }
    }

    #[test]
    fn peo_verification() {
        let two_k2 = graph(4, &[&[0, 2], &[1, 3]]);
        assert!(is_perfect_elimination_order(&two_k2, &[0, 1, 2, 3]).unwrap());
        // A star's center must come last.
        let star = graph(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert!(!is_perfect_elimination_order(&star, &[0, 1, 2, 3]).unwrap());
        assert!(is_perfect_elimination_order(&star, &[1, 2, 3, 0]).unwrap());
        assert!(matches!(
            is_perfect_elimination_order(&star, &[0, 0, 1, 2]),
            Err(Error::NotAPermutation(4))
        ));
    }

    #[test]
    fn peo_restriction_stays_a_peo() {
        // Chordal graph: triangle with a pendant.
        let g = graph(4, &[&[0, 1], &[0, 2], &[1, 2], &[2, 3]]);
        let peo = match find_peo(&g) {
            PeoOutcome::Peo(p) => p.order().to_vec(),
            PeoOutcome::NotChordal { .. } => panic!("chordal"),
        };
        for keep_bits in 0u64..16 {
            let keep = VertexSet::from_bits(keep_bits);
            let sub = g.induced(keep).unwrap();
            let members: Vec<usize> = keep.iter().collect();
            let restricted: Vec<usize> = peo
                .iter()
                .filter(|v| keep.contains(**v))
                .map(|&v| members.iter().position(|&m| m == v).unwrap())
                .collect();
            assert!(is_perfect_elimination_order(&sub, &restricted).unwrap());
        }
    }

    #[test]
    fn strong_shelling_from_the_frozen_peo() {
        // C₄ with the elimination order 1,2,3,4 of its complement 2K₂
        // yields the edge order 12, 23, 14, 34.
        let order = strong_shelling_from_peo(&c4(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(order.render(), "{1,2} < {2,3} < {1,4} < {3,4}");
        assert_eq!(order.status(), OrderStatus::StrongShelling);

        // An order that fails the elimination condition is rejected.
        let k2k2 = graph(4, &[&[0, 2], &[1, 3]]);
        assert!(matches!(
            strong_shelling_from_peo(&k2k2, &[0, 1, 2, 3]),
            Err(Error::NotAnEliminationOrder)
        ));
    }

    #[test]
    fn ess_decisions() {
        assert!(is_ess_graph(&c4()).unwrap().is_some());
        assert!(is_ess_graph(&path(5)).unwrap().is_none());
        for n in 2..=5 {
            let k = Graph::complete(Labeling::numeric(n).unwrap());
            assert!(is_ess_graph(&k).unwrap().is_some());
        }
        let two_k2 = graph(4, &[&[0, 2], &[1, 3]]);
        assert!(is_ess_graph(&two_k2).unwrap().is_none());
        // Edgeless graphs are vacuously ESS (void edge complex).
        let edgeless = Graph::edgeless(Labeling::numeric(3).unwrap());
        assert!(is_ess_graph(&edgeless).unwrap().is_some());
    }

    #[test]
    fn constructive_route_agrees_with_search_on_paths() {
        for n in 2..=6 {
            let g = path(n);
            let direct = find_strong_shelling(&edge_complex(&g)).unwrap().is_some();
            let constructive = peo_to_strong_shelling(&g).unwrap().is_some();
            assert_eq!(direct, constructive, "disagreement on the path with {n} vertices");
        }
    }

    #[test]
    fn quotient_examples() {
        // a—b₁, b₂—c with both b's sent to b: path a—b—c, proper.
        let g = Graph::from_label_pairs(
            Labeling::new(["a", "b1", "b2", "c"]).unwrap(),
            [("a", "b1"), ("b2", "c")],
        )
        .unwrap();
        let target = Labeling::new(["a", "b", "c"]).unwrap();
        let map = QuotientMap::new(target.clone(), vec![0, 1, 1, 2]).unwrap();
        let q = quotient_graph(&g, &map).unwrap();
        assert!(q.proper);
        assert_eq!(q.graph.edges(), &[vs(&[0, 1]), vs(&[1, 2])]);

        // Identity map: the graph itself, proper.
        let id = QuotientMap::new(g.universe().clone(), vec![0, 1, 2, 3]).unwrap();
        let q = quotient_graph(&g, &id).unwrap();
        assert!(q.proper);
        assert_eq!(q.graph, g);

        // A fiber spanning an edge makes the map improper.
        let map = QuotientMap::new(target.clone(), vec![1, 1, 2, 0]).unwrap();
        assert!(!quotient_graph(&g, &map).unwrap().proper);

        // Non-surjective maps are rejected.
        let map = QuotientMap::new(target, vec![0, 0, 0, 2]).unwrap();
        assert!(matches!(
            quotient_graph(&g, &map),
            Err(Error::QuotientNotSurjective(b)) if b == "b"
        ));
    }

    #[test]
    fn quotients_preserve_ess() {
        let g = c4();
        assert!(is_ess_graph(&g).unwrap().is_some());
        // Merge two adjacent vertices (improper) and two opposite ones
        // (proper): both quotients stay ESS.
        let target = Labeling::new(["p", "q", "r"]).unwrap();
        for map_vec in [vec![0, 0, 1, 2], vec![0, 1, 0, 2]] {
            let map = QuotientMap::new(target.clone(), map_vec).unwrap();
            let q = quotient_graph(&g, &map).unwrap();
            assert!(is_ess_graph(&q.graph).unwrap().is_some());
        }
    }

    #[test]
    fn blow_up_examples() {
        let edge = graph(2, &[&[0, 1]]);
        let m1 = blow_up(&edge, 1, 1).unwrap();
        assert_eq!(m1.universe().labels(), &["1", "2_1"]);
        assert_eq!(m1.edge_count(), 1);

        let star = blow_up(&edge, 1, 2).unwrap();
        assert_eq!(star.universe().labels(), &["1", "2_1", "2_2"]);
        assert_eq!(star.edges(), &[vs(&[0, 1]), vs(&[0, 2])]);

        assert!(matches!(
            blow_up(&edge, 0, 0),
            Err(Error::MultiplicityTooSmall)
        ));
    }

    #[test]
    fn blow_ups_preserve_ess() {
        for v in 0..4 {
            for m in 1..=3 {
                let h = blow_up(&c4(), v, m).unwrap();
                assert!(is_ess_graph(&h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn expansion_matches_direct_construction_on_an_edge() {
        // Edge 1-2 with s = (2, 1): fiber clique {x11,x12} plus both
        // cross edges.
        let g = graph(2, &[&[0, 1]]);
        let e = expand_graph(&g, &[2, 1]).unwrap();
        assert_eq!(
            e.universe().labels(),
            &["x_{1,1}", "x_{1,2}", "x_{2,1}"]
        );
        assert_eq!(e.edges(), &[vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
    }

    #[test]
    fn expansion_of_complete_graph_is_complete() {
        let k3 = Graph::complete(Labeling::numeric(3).unwrap());
        let e = expand_graph(&k3, &[2, 2, 2]).unwrap();
        assert_eq!(e.vertex_count(), 6);
        assert_eq!(e.edge_count(), 15);
    }

    #[test]
    fn expansion_preserves_chordality_both_ways() {
        let samples = [
            (path(4), vec![2, 1, 2, 1]),
            (c4(), vec![2, 1, 1, 2]),
            (graph(3, &[&[0, 1], &[1, 2]]), vec![1, 2, 2]),
        ];
        for (g, s) in samples {
            let expanded = expand_graph(&g, &s).unwrap();
            assert_eq!(is_chordal(&g), is_chordal(&expanded));
        }
    }

    #[test]
    fn metric_examples() {
        let p3 = path(3);
        assert_eq!(distance(&p3, 0, 2).unwrap(), Some(2));
        assert_eq!(diameter(&c4()), Some(2));
        let disconnected = graph(3, &[&[0, 1]]);
        assert_eq!(distance(&disconnected, 0, 2).unwrap(), None);
        assert_eq!(diameter(&disconnected), None);
        assert_eq!(diameter(&Graph::edgeless(Labeling::numeric(1).unwrap())), Some(0));
    }

    #[test]
    fn line_graph_distances() {
        let g = c4();
        // Canonical edge order: {1,2}, {2,3}, {1,4}, {3,4}.
        assert_eq!(g.edges(), &[vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 3]), vs(&[2, 3])]);
        let lg = line_graph(&g);
        assert_eq!(lg.vertex_count(), 4);
        // Opposite edges of the 4-cycle are at line-graph distance 2.
        assert_eq!(edge_distance(&g, 0, 3).unwrap(), Some(2));
        assert_eq!(edge_distance(&g, 0, 1).unwrap(), Some(1));
        assert!(matches!(
            edge_distance(&g, 0, 9),
            Err(Error::VertexOutOfRange(9, 4))
        ));
    }
}
