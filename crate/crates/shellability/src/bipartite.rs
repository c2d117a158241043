//! Connected bipartite graphs through the lens of edgewise strong
//! shellability: distance layers from a base vertex, construction and
//! recovery of upward degree sequences, the lexicographic strong shelling
//! of a decomposable graph, Ferrers staircase recognition, and
//! low-eccentricity centers.

use std::cmp::Reverse;
use std::fmt;

use crate::base::{Graph, Labeling, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::edge_complex;
use crate::shelling::{verify_strong_order, FacetOrder, OrderStatus, Verified};

/// Distance layers `D(w,0..3)` from a base vertex together with the
/// per-vertex upward and downward neighborhood tables.
#[derive(Clone, Debug)]
pub struct LayerReport {
    base: usize,
    layers: [VertexSet; 4],
    beyond: VertexSet,
    unreachable: VertexSet,
    up: Vec<VertexSet>,
    down: Vec<VertexSet>,
}

impl LayerReport {
    pub fn base(&self) -> usize {
        self.base
    }

    /// The vertices at distance `i` from the base, `i ≤ 3`.
    pub fn layer(&self, i: usize) -> VertexSet {
        self.layers[i]
    }

    /// Vertices at distance 4 or more (non-empty signals a graph outside
    /// the decomposable class).
    pub fn beyond(&self) -> VertexSet {
        self.beyond
    }

    /// Vertices in other components.
    pub fn unreachable(&self) -> VertexSet {
        self.unreachable
    }

    /// Neighbors one layer further from the base.
    pub fn upward(&self, v: usize) -> VertexSet {
        self.up[v]
    }

    /// Neighbors one layer closer to the base.
    pub fn downward(&self, v: usize) -> VertexSet {
        self.down[v]
    }

    pub fn upward_degree(&self, v: usize) -> usize {
        self.up[v].len()
    }
}

/// Breadth-first layers and neighborhood tables from a base vertex.
pub fn layer_report(graph: &Graph, base: usize) -> Result<LayerReport> {
    graph.universe().check_vertex(base)?;
    let n = graph.vertex_count();
    let dist = graph.bfs_distances(base);
    let mut layers = [VertexSet::EMPTY; 4];
    let mut beyond = VertexSet::EMPTY;
    let mut unreachable = VertexSet::EMPTY;
    for v in 0..n {
        match dist[v] {
            Some(d) if d <= 3 => layers[d] = layers[d].insert(v),
            Some(_) => beyond = beyond.insert(v),
            None => unreachable = unreachable.insert(v),
        }
    }
    let toward = |v: usize, delta: i64| -> VertexSet {
        match dist[v] {
            Some(d) => VertexSet::from_indices(
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&u| dist[u] == usize::try_from(d as i64 + delta).ok()),
            ),
            None => VertexSet::EMPTY,
        }
    };
    let up = (0..n).map(|v| toward(v, 1)).collect();
    let down = (0..n).map(|v| toward(v, -1)).collect();
    Ok(LayerReport {
        base,
        layers,
        beyond,
        unreachable,
        up,
        down,
    })
}

/// The pair of upward degree sequences that determines a decomposable
/// connected bipartite graph: `d₁ ≥ … ≥ d_t` for the first layer and
/// `d′₁ ≥ … ≥ d′_{d₁}` for the second, with `d′_k = 0` beyond `k = d_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpwardSequences {
    d: Vec<usize>,
    dprime: Vec<usize>,
}

fn first_increase(sequence: &[usize]) -> Option<usize> {
    sequence
        .windows(2)
        .position(|w| w[0] < w[1])
        .map(|p| p + 2)
}

impl UpwardSequences {
    /// Validate the sequence shape: `d` non-empty and non-increasing,
    /// `dprime` of length `d₁`, non-increasing, and zero past position
    /// `d_t`.
    pub fn new(d: Vec<usize>, dprime: Vec<usize>) -> Result<UpwardSequences> {
        if d.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(position) = first_increase(&d) {
            return Err(Error::SequenceNotMonotone(position));
        }
        if dprime.len() != d[0] {
            return Err(Error::SequenceLengthMismatch {
                expected: d[0],
                got: dprime.len(),
            });
        }
        if let Some(position) = first_increase(&dprime) {
            return Err(Error::SequenceNotMonotone(position));
        }
        let d_t = *d.last().expect("d is non-empty");
        if dprime.iter().skip(d_t).any(|&entry| entry != 0) {
            return Err(Error::SequenceTailNotZero(d_t));
        }
        Ok(UpwardSequences { d, dprime })
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn dprime(&self) -> &[usize] {
        &self.dprime
    }

    /// The size of the first layer.
    pub fn t(&self) -> usize {
        self.d.len()
    }

    /// Vertices of the constructed graph: `1 + t + d₁ + d′₁`.
    pub fn vertex_count(&self) -> usize {
        1 + self.t() + self.d[0] + self.dprime.first().copied().unwrap_or(0)
    }

    /// Edges of the constructed graph: `t + Σdᵢ + Σd′ₖ`.
    pub fn edge_count(&self) -> usize {
        self.t() + self.d.iter().sum::<usize>() + self.dprime.iter().sum::<usize>()
    }

    pub fn render(&self) -> String {
        let list = |s: &[usize]| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("d = ({}); d' = ({})", list(&self.d), list(&self.dprime))
    }
}

/// Build the graph determined by a pair of upward degree sequences:
/// base `w` adjacent to `x₁..x_t`; `x_i` adjacent to the first `d_i`
/// second-layer vertices; `y_k` adjacent to the first `d′_k` third-layer
/// vertices.
pub fn construct_from_sequences(seqs: &UpwardSequences) -> Result<Graph> {
    let t = seqs.t();
    let d1 = seqs.d[0];
    let e1 = seqs.dprime.first().copied().unwrap_or(0);
    let mut labels = vec!["w".to_string()];
    labels.extend((1..=t).map(|i| format!("x{i}")));
    labels.extend((1..=d1).map(|k| format!("y{k}")));
    labels.extend((1..=e1).map(|l| format!("z{l}")));
    let universe = Labeling::new(labels)?;
    let x = |i: usize| i;
    let y = |k: usize| t + k;
    let z = |l: usize| t + d1 + l;
    let mut edges = Vec::with_capacity(seqs.edge_count());
    for i in 1..=t {
        edges.push(VertexSet::from_indices([0, x(i)]));
        for k in 1..=seqs.d[i - 1] {
            edges.push(VertexSet::from_indices([x(i), y(k)]));
        }
    }
    for k in 1..=d1 {
        for l in 1..=seqs.dprime[k - 1] {
            edges.push(VertexSet::from_indices([y(k), z(l)]));
        }
    }
    Graph::new(universe, edges)
}

/// Why a graph fails to decompose from a chosen base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotDecomposableReason {
    Disconnected,
    NotBipartite,
    /// Some vertex lies at distance 4 or more from the base.
    LayerFour,
    /// The base vertex has no neighbors (a single-vertex graph).
    SingleVertex,
    /// Upward neighborhoods within the given layer are not totally
    /// ordered by inclusion.
    UpwardChainBroken { layer: usize },
    /// A second-layer vertex with upward neighbors misses part of the
    /// first layer below it.
    DownwardIncomplete,
    /// The graph rebuilt from the recovered sequences differs from the
    /// input (safety net; unreachable when the other checks pass).
    ReconstructionMismatch,
}

impl fmt::Display for NotDecomposableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDecomposableReason::Disconnected => write!(f, "the graph is disconnected"),
            NotDecomposableReason::NotBipartite => write!(f, "the graph is not bipartite"),
            NotDecomposableReason::LayerFour => {
                write!(f, "a vertex lies at distance 4 or more from the base")
            }
            NotDecomposableReason::SingleVertex => {
                write!(f, "the base vertex has no neighbors")
            }
            NotDecomposableReason::UpwardChainBroken { layer } => write!(
                f,
                "upward neighborhoods in layer {layer} do not form an inclusion chain"
            ),
            NotDecomposableReason::DownwardIncomplete => write!(
                f,
                "a second-layer vertex with upward neighbors is not adjacent to all of layer 1"
            ),
            NotDecomposableReason::ReconstructionMismatch => {
                write!(f, "the reconstructed graph differs from the input")
            }
        }
    }
}

/// A successful decomposition: the sequences plus the layer orders that
/// realize the isomorphism with the constructed model graph.
#[derive(Clone, Debug)]
pub struct Decomposition {
    sequences: UpwardSequences,
    base: usize,
    x_order: Vec<usize>,
    y_order: Vec<usize>,
    z_order: Vec<usize>,
}

impl Decomposition {
    pub fn sequences(&self) -> &UpwardSequences {
        &self.sequences
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn x_order(&self) -> &[usize] {
        &self.x_order
    }

    pub fn y_order(&self) -> &[usize] {
        &self.y_order
    }

    pub fn z_order(&self) -> &[usize] {
        &self.z_order
    }

    /// The bijection from the constructed model graph's vertex indices
    /// (`w, x₁.., y₁.., z₁..`) to the original graph's indices.
    pub fn vertex_map(&self) -> Vec<usize> {
        let mut map = vec![self.base];
        map.extend_from_slice(&self.x_order);
        map.extend_from_slice(&self.y_order);
        map.extend_from_slice(&self.z_order);
        map
    }
}

/// Outcome of trying to decompose a graph from a base vertex.
#[derive(Clone, Debug)]
pub enum Recovery {
    Decomposed(Decomposition),
    NotDecomposable(NotDecomposableReason),
}

impl Recovery {
    pub fn decomposed(&self) -> Option<&Decomposition> {
        match self {
            Recovery::Decomposed(d) => Some(d),
            Recovery::NotDecomposable(_) => None,
        }
    }

    pub fn holds(&self) -> bool {
        self.decomposed().is_some()
    }
}

/// Recover upward degree sequences from a graph and a base vertex, or
/// report why the graph is not decomposable from it.  Succeeds exactly
/// when the layers reach at most distance 3, the upward neighborhoods in
/// layers 1 and 2 form inclusion chains, every second-layer vertex with
/// upward neighbors sees all of layer 1, and replaying the construction
/// reproduces the graph.
pub fn recover_sequences(graph: &Graph, base: usize) -> Result<Recovery> {
    let report = layer_report(graph, base)?;
    let fail = |reason| Ok(Recovery::NotDecomposable(reason));
    if !report.unreachable().is_empty() {
        return fail(NotDecomposableReason::Disconnected);
    }
    if graph.bipartition().is_none() {
        return fail(NotDecomposableReason::NotBipartite);
    }
    if !report.beyond().is_empty() {
        return fail(NotDecomposableReason::LayerFour);
    }
    if report.layer(1).is_empty() {
        return fail(NotDecomposableReason::SingleVertex);
    }

    // Sorting each layer by upward degree makes an inclusion chain (when
    // one exists) appear in weakly decreasing order, so checking adjacent
    // pairs suffices.  The second layer sorts primarily by downward
    // degree so that every first-layer upward neighborhood becomes an
    // initial segment; ties prefer upward degree, then the label.
    let mut x_order: Vec<usize> = report.layer(1).iter().collect();
    x_order.sort_by_key(|&v| (Reverse(report.upward_degree(v)), v));
    for pair in x_order.windows(2) {
        if !report.upward(pair[1]).is_subset_of(report.upward(pair[0])) {
            return fail(NotDecomposableReason::UpwardChainBroken { layer: 1 });
        }
    }

    let mut y_order: Vec<usize> = report.layer(2).iter().collect();
    y_order.sort_by_key(|&v| {
        (
            Reverse(report.downward(v).len()),
            Reverse(report.upward_degree(v)),
            v,
        )
    });
    for pair in y_order.windows(2) {
        if !report.upward(pair[1]).is_subset_of(report.upward(pair[0])) {
            return fail(NotDecomposableReason::UpwardChainBroken { layer: 2 });
        }
    }
    for &v in &y_order {
        if !report.upward(v).is_empty() && report.downward(v) != report.layer(1) {
            return fail(NotDecomposableReason::DownwardIncomplete);
        }
    }

    let mut z_order: Vec<usize> = report.layer(3).iter().collect();
    z_order.sort_by_key(|&v| (Reverse(report.downward(v).len()), v));

    let d: Vec<usize> = x_order.iter().map(|&v| report.upward_degree(v)).collect();
    let dprime: Vec<usize> = y_order.iter().map(|&v| report.upward_degree(v)).collect();
    let sequences = match UpwardSequences::new(d, dprime) {
        Ok(s) => s,
        Err(_) => return fail(NotDecomposableReason::ReconstructionMismatch),
    };

    let decomposition = Decomposition {
        sequences,
        base,
        x_order,
        y_order,
        z_order,
    };
    if !reconstruction_matches(graph, &decomposition) {
        return fail(NotDecomposableReason::ReconstructionMismatch);
    }
    Ok(Recovery::Decomposed(decomposition))
}

/// Does replaying the construction along the discovered layer orders give
/// back exactly the input graph?
fn reconstruction_matches(graph: &Graph, decomposition: &Decomposition) -> bool {
    let model = match construct_from_sequences(decomposition.sequences()) {
        Ok(model) => model,
        Err(_) => return false,
    };
    if model.vertex_count() != graph.vertex_count()
        || model.edge_count() != graph.edge_count()
    {
        return false;
    }
    let map = decomposition.vertex_map();
    model.edges().iter().all(|edge| {
        let mut it = edge.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        graph.has_edge(map[a], map[b])
    })
}

/// The strong shelling of a decomposable graph's edges induced by the
/// vertex order `w ≻ x₁ ≻ … ≻ z_{d′₁}`: edges sort lexicographically by
/// their nearer endpoint, then their farther one.  The result is
/// re-verified; a verification failure is a hard error because the
/// construction is proven to work on decomposable inputs.
pub fn lex_strong_shelling(graph: &Graph, base: usize) -> Result<FacetOrder> {
    let decomposition = match recover_sequences(graph, base)? {
        Recovery::Decomposed(d) => d,
        Recovery::NotDecomposable(reason) => {
            return Err(Error::NotDecomposableFrom(reason.to_string()))
        }
    };
    let mut rank = vec![0usize; graph.vertex_count()];
    for (r, &v) in decomposition.vertex_map().iter().enumerate() {
        rank[v] = r;
    }
    let complex = edge_complex(graph);
    let mut order: Vec<usize> = (0..complex.facet_count()).collect();
    order.sort_by_key(|&idx| {
        let mut it = complex.facets()[idx].iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        (rank[a].min(rank[b]), rank[a].max(rank[b]))
    });
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

/// A staircase layout: both sides of the bipartition in the degree order
/// under which every row's neighborhood is an initial segment of the
/// column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersLayout {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl FerrersLayout {
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }
}

/// Outcome of the staircase test on a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FerrersOutcome {
    Ferrers(FerrersLayout),
    /// `{vertex, present}` is an edge although the earlier column
    /// `missing` is not adjacent to `vertex` — the staircase breaks.
    NotFerrers {
        vertex: usize,
        present: usize,
        missing: usize,
    },
}

impl FerrersOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, FerrersOutcome::Ferrers(_))
    }

    pub fn layout(&self) -> Option<&FerrersLayout> {
        match self {
            FerrersOutcome::Ferrers(layout) => Some(layout),
            FerrersOutcome::NotFerrers { .. } => None,
        }
    }
}

/// Staircase recognition: sort both sides of a bipartition by descending
/// degree (ties by label) and test whether every neighborhood is an
/// initial segment of the other side's order.  Equal-degree vertices in a
/// staircase have identical neighborhoods, so the degree order decides
/// the question for every order at once.
pub fn is_ferrers(graph: &Graph) -> Result<FerrersOutcome> {
    let (side_a, side_b) = graph
        .bipartition()
        .ok_or_else(|| Error::NotBipartite(odd_walk_vertex(graph)))?;
    let sorted = |side: VertexSet| {
        let mut vertices: Vec<usize> = side.iter().collect();
        vertices.sort_by_key(|&v| (Reverse(graph.degree(v)), v));
        vertices
    };
    let rows = sorted(side_a);
    let cols = sorted(side_b);
    for &x in &rows {
        let mut first_missing: Option<usize> = None;
        for &y in &cols {
            if graph.has_edge(x, y) {
                if let Some(missing) = first_missing {
                    return Ok(FerrersOutcome::NotFerrers {
                        vertex: x,
                        present: y,
                        missing,
                    });
                }
            } else if first_missing.is_none() {
                first_missing = Some(y);
            }
        }
    }
    Ok(FerrersOutcome::Ferrers(FerrersLayout { rows, cols }))
}

/// A vertex on an odd closed walk, for the non-bipartite diagnostic.
fn odd_walk_vertex(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in graph.neighbors(v).iter() {
                if color[u].is_none() {
                    color[u] = Some(!color[v].unwrap());
                    queue.push_back(u);
                }
            }
        }
    }
    for &edge in graph.edges() {
        let mut it = edge.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        if color[u] == color[v] {
            return graph.universe().label(u).to_string();
        }
    }
    unreachable!("called only on non-bipartite graphs")
}

/// The least vertex whose distance to every other vertex is at most 2.
/// Guaranteed to exist for connected decomposable bipartite graphs.
pub fn eccentric_center(graph: &Graph) -> Result<usize> {
    (0..graph.vertex_count())
        .find(|&v| {
            graph
                .bfs_distances(v)
                .iter()
                .all(|d| matches!(d, Some(x) if *x <= 2))
        })
        .ok_or(Error::NoEccentricCenter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Labeling;
    use crate::graphs::is_ess_graph;
    use crate::shelling::Verified;

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

    fn staircase_example() -> Graph {
        let seqs = UpwardSequences::new(vec![4, 3, 2], vec![2, 1, 0, 0]).unwrap();
        construct_from_sequences(&seqs).unwrap()
    }

    #[test]
    fn sequence_validation() {
        assert!(UpwardSequences::new(vec![4, 3, 2], vec![2, 1, 0, 0]).is_ok());
        assert!(matches!(
            UpwardSequences::new(vec![], vec![]),
            Err(Error::EmptySequence)
        ));
        assert!(matches!(
            UpwardSequences::new(vec![1, 2], vec![0]),
            Err(Error::SequenceNotMonotone(2))
        ));
        assert!(matches!(
            UpwardSequences::new(vec![2], vec![0]),
            Err(Error::SequenceLengthMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(
            UpwardSequences::new(vec![2, 2], vec![0, 1]),
            Err(Error::SequenceNotMonotone(2))
        ));
        assert!(matches!(
            UpwardSequences::new(vec![2, 1], vec![1, 1]),
            Err(Error::SequenceTailNotZero(1))
        ));
        let seqs = UpwardSequences::new(vec![4, 3, 2], vec![2, 1, 0, 0]).unwrap();
        assert_eq!(seqs.render(), "d = (4, 3, 2); d' = (2, 1, 0, 0)");
        assert_eq!(seqs.vertex_count(), 10);
        assert_eq!(seqs.edge_count(), 15);
    }

    #[test]
    fn construction_examples() {
        let example = staircase_example();
        assert_eq!(example.vertex_count(), 10);
        assert_eq!(example.edge_count(), 15);

        let path = construct_from_sequences(&UpwardSequences::new(vec![1], vec![0]).unwrap())
            .unwrap();
        assert_eq!(path.universe().labels(), &["w", "x1", "y1"]);
        assert_eq!(path.edges(), &[vs(&[0, 1]), vs(&[1, 2])]);

        // d = (k) with all-zero d': a star over w plus a pendant layer.
        let double_star =
            construct_from_sequences(&UpwardSequences::new(vec![3], vec![0, 0, 0]).unwrap())
                .unwrap();
        assert_eq!(double_star.vertex_count(), 5);
        assert_eq!(double_star.edge_count(), 4);
        assert_eq!(double_star.degree(1), 4);

        let k2 = construct_from_sequences(&UpwardSequences::new(vec![0], vec![]).unwrap())
            .unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn layer_reports() {
        // Star: center base puts all leaves in layer 1.
        let star = graph(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let report = layer_report(&star, 0).unwrap();
        assert_eq!(report.layer(0), vs(&[0]));
        assert_eq!(report.layer(1), vs(&[1, 2, 3]));
        assert!(report.layer(2).is_empty());

        // Path from an end: singleton layers.
        let path = graph(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let report = layer_report(&path, 0).unwrap();
        for i in 0..4 {
            assert_eq!(report.layer(i), VertexSet::singleton(i));
        }
        assert_eq!(report.upward(1), vs(&[2]));
        assert_eq!(report.downward(1), vs(&[0]));

        // The staircase example from its construction base: layer sizes 1,3,4,2.
        let report = layer_report(&staircase_example(), 0).unwrap();
        let sizes: Vec<usize> = (0..4).map(|i| report.layer(i).len()).collect();
        assert_eq!(sizes, vec![1, 3, 4, 2]);
    }

    #[test]
    fn square_recovers_from_every_vertex() {
        let c4 = c4();
        for base in 0..4 {
            let recovery = recover_sequences(&c4, base).unwrap();
            let decomposition = recovery.decomposed().expect("C4 is decomposable");
            assert_eq!(decomposition.sequences().d(), &[1, 1]);
            assert_eq!(decomposition.sequences().dprime(), &[0]);
        }
    }

    #[test]
    fn staircase_example_recovers_its_sequences() {
        let example = staircase_example();
        let recovery = recover_sequences(&example, 0).unwrap();
        let decomposition = recovery.decomposed().expect("decomposable by construction");
        assert_eq!(decomposition.sequences().d(), &[4, 3, 2]);
        assert_eq!(decomposition.sequences().dprime(), &[2, 1, 0, 0]);
        // Round trip: rebuild and map edges through the layer orders.
        let rebuilt = construct_from_sequences(decomposition.sequences()).unwrap();
        let map = decomposition.vertex_map();
        assert_eq!(rebuilt.edge_count(), example.edge_count());
        for edge in rebuilt.edges() {
            let mut it = edge.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            assert!(example.has_edge(map[a], map[b]));
        }
        // And from every other vertex as well (the graph is decomposable).
        for base in 1..example.vertex_count() {
            assert!(recover_sequences(&example, base).unwrap().holds());
        }
    }

    #[test]
    fn recovery_failure_reasons() {
        let two_k2 = graph(4, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            recover_sequences(&two_k2, 0).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::Disconnected)
        ));

        let triangle = graph(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(matches!(
            recover_sequences(&triangle, 0).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::NotBipartite)
        ));

        let p5 = graph(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]);
        assert!(matches!(
            recover_sequences(&p5, 0).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::LayerFour)
        ));

        let k1 = Graph::edgeless(Labeling::numeric(1).unwrap());
        assert!(matches!(
            recover_sequences(&k1, 0).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::SingleVertex)
        ));

        let c6 = graph(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        assert!(matches!(
            recover_sequences(&c6, 0).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::UpwardChainBroken { layer: 1 })
        ));

        // P5 from its second vertex: chains hold, but the single
        // second-layer vertex has an upward neighbor while missing one
        // first-layer vertex below.
        assert!(matches!(
            recover_sequences(&p5, 1).unwrap(),
            Recovery::NotDecomposable(NotDecomposableReason::DownwardIncomplete)
        ));
    }

    #[test]
    fn lexicographic_shelling_examples() {
        let path = construct_from_sequences(&UpwardSequences::new(vec![1], vec![0]).unwrap())
            .unwrap();
        let order = lex_strong_shelling(&path, 0).unwrap();
        assert_eq!(order.render(), "{w,x1} < {x1,y1}");

        let c4_order = lex_strong_shelling(&c4(), 0).unwrap();
        assert_eq!(c4_order.order().len(), 4);
        assert!(matches!(
            verify_strong_order(c4_order.complex(), c4_order.order()).unwrap(),
            Verified::Valid
        ));

        let example_order = lex_strong_shelling(&staircase_example(), 0).unwrap();
        assert_eq!(example_order.order().len(), 15);

        let c6 = graph(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        assert!(matches!(
            lex_strong_shelling(&c6, 0),
            Err(Error::NotDecomposableFrom(_))
        ));
    }

    #[test]
    fn ferrers_recognition() {
        // Complete bipartite K_{2,3}.
        let k23 = graph(5, &[&[0, 2], &[0, 3], &[0, 4], &[1, 2], &[1, 3], &[1, 4]]);
        assert!(is_ferrers(&k23).unwrap().holds());

        let c6 = graph(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        match is_ferrers(&c6).unwrap() {
            FerrersOutcome::NotFerrers {
                vertex,
                present,
                missing,
            } => {
                assert!(c6.has_edge(vertex, present));
                assert!(!c6.has_edge(vertex, missing));
            }
            FerrersOutcome::Ferrers(_) => panic!("C6 is not a staircase"),
        }

        assert!(is_ferrers(&staircase_example()).unwrap().holds());

        let triangle = graph(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(matches!(
            is_ferrers(&triangle),
            Err(Error::NotBipartite(_))
        ));
    }

    #[test]
    fn eccentric_centers() {
        let star = graph(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert_eq!(eccentric_center(&star).unwrap(), 0);

        assert_eq!(eccentric_center(&c4()).unwrap(), 0);

        // The staircase example: x1 reaches everything within 2; the first
        // second-layer vertex does as well.
        let example = staircase_example();
        let center = eccentric_center(&example).unwrap();
        assert_eq!(center, 1);
        let y1 = 4;
        assert!(example
            .bfs_distances(y1)
            .iter()
            .all(|d| matches!(d, Some(x) if *x <= 2)));

        let p7 = graph(7, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6]]);
        assert!(matches!(
            eccentric_center(&p7),
            Err(Error::NoEccentricCenter)
        ));
    }

    #[test]
    fn decomposability_tracks_edgewise_strong_shellability() {
        // Spot-check the equivalence on a few connected bipartite graphs.
        let samples = vec![
            c4(),
            staircase_example(),
            graph(4, &[&[0, 1], &[1, 2], &[2, 3]]),
            graph(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]),
            graph(5, &[&[0, 2], &[0, 3], &[0, 4], &[1, 2], &[1, 3], &[1, 4]]),
        ];
        for g in samples {
            let ess = is_ess_graph(&g).unwrap().is_some();
            let from_all =
                (0..g.vertex_count()).all(|w| recover_sequences(&g, w).unwrap().holds());
            let from_some =
                (0..g.vertex_count()).any(|w| recover_sequences(&g, w).unwrap().holds());
            let ferrers = is_ferrers(&g).unwrap().holds();
            assert_eq!(ess, from_all);
            assert_eq!(ess, from_some);
            assert_eq!(ess, ferrers);
        }
    }
}
