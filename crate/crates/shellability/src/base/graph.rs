//! Finite simple graphs and trees.

use crate::base::labeling::Labeling;
use crate::base::vset::{sort_canonically, VertexSet};
use crate::error::{Error, Result};

/// A finite simple graph on a labeled universe.  Edges are stored as
/// two-element [`VertexSet`]s in canonical order, and adjacency sets are
/// precomputed per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    universe: Labeling,
    edges: Vec<VertexSet>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Build a graph from explicit edges.  Each edge must have exactly two
    /// vertices, lie in the universe, and appear at most once.
    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: Labeling, edges: I) -> Result<Graph> {
        let mut seen: Vec<VertexSet> = Vec::new();
        for e in edges {
            universe.check_set(e)?;
            if e.len() != 2 {
                return Err(Error::NotTwoElementEdge(universe.render_set(e)));
            }
            if seen.contains(&e) {
                return Err(Error::DuplicateEdge(universe.render_set(e)));
            }
            seen.push(e);
        }
        Ok(Graph::from_dedup_edges(universe, seen))
    }

    /// Internal constructor for edge lists that may repeat (e.g. images
    /// under a quotient); duplicates are merged.
    pub(crate) fn from_dedup_edges(universe: Labeling, edges: Vec<VertexSet>) -> Graph {
        let mut edges: Vec<VertexSet> = edges;
        sort_canonically(&mut edges);
        edges.dedup();
        let mut adjacency = vec![VertexSet::EMPTY; universe.len()];
        for &e in &edges {
            let mut it = e.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            adjacency[u] = adjacency[u].insert(v);
            adjacency[v] = adjacency[v].insert(u);
        }
        Graph {
            universe,
            edges,
            adjacency,
        }
    }

    /// Build from label pairs.
    pub fn from_label_pairs<'a, I: IntoIterator<Item = (&'a str, &'a str)>>(
        universe: Labeling,
        pairs: I,
    ) -> Result<Graph> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            edges.push(universe.set_of([a, b])?);
        }
        Graph::new(universe, edges)
    }

    /// The graph with no edges on a universe.
    pub fn edgeless(universe: Labeling) -> Graph {
        let n = universe.len();
        Graph {
            universe,
            edges: Vec::new(),
            adjacency: vec![VertexSet::EMPTY; n],
        }
    }

    /// The complete graph on a universe.
    pub fn complete(universe: Labeling) -> Graph {
        let n = universe.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push(VertexSet::from_indices([u, v]));
            }
        }
        Graph::from_dedup_edges(universe, edges)
    }

    pub fn universe(&self) -> &Labeling {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Open neighborhood of a vertex.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v].insert(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].contains(v)
    }

    /// Vertices reachable from `start` (including it).
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in self.adjacency[v].iter() {
                if !seen.contains(u) {
                    seen = seen.insert(u);
                    queue.push(u);
                }
            }
        }
        seen
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.universe.full_set();
        let mut out = Vec::new();
        while let Some(start) = remaining.min_index() {
            let comp = self.reachable_from(start);
            out.push(comp);
            remaining = remaining.minus(comp);
        }
        out
    }

    /// Connectedness; graphs with fewer than two vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `start`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        dist[start] = Some(0);
        let mut frontier = vec![start];
        let mut d = 0usize;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for u in self.adjacency[v].iter() {
                    if dist[u].is_none() {
                        dist[u] = Some(d);
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// A shortest path between two vertices as a vertex list, if one exists.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let dist = self.bfs_distances(from);
        dist[to]?;
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            let d = dist[cur].unwrap();
            let prev = self.adjacency[cur]
                .iter()
                .find(|&u| dist[u] == Some(d - 1))
                .expect("vertex on a shortest path has a predecessor");
            path.push(prev);
            cur = prev;
        }
        path.reverse();
        Some(path)
    }

    /// Two-coloring `(side0, side1)` if the graph is bipartite, else `None`.
    /// Isolated vertices are placed on side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let c = color[v].unwrap();
                for u in self.adjacency[v].iter() {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut side0 = VertexSet::EMPTY;
        let mut side1 = VertexSet::EMPTY;
        for (v, c) in color.iter().enumerate() {
            match c.unwrap() {
                false => side0 = side0.insert(v),
                true => side1 = side1.insert(v),
            }
        }
        Some((side0, side1))
    }

    /// Induced subgraph on `keep`; vertices are re-indexed rank-preservingly
    /// (pairs with [`VertexSet::compress_into`]).
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        self.universe.check_set(keep)?;
        let sub_universe = self.universe.restrict(keep);
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.is_subset_of(keep))
            .map(|&e| e.compress_into(keep))
            .collect();
        Ok(Graph::from_dedup_edges(sub_universe, edges))
    }

    /// Render the edge list with universe labels.
    pub fn render_edges(&self) -> String {
        self.edges
            .iter()
            .map(|&e| self.universe.render_set(e))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// A tree: a connected graph with exactly `n - 1` edges, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    /// Validate that a graph is a tree.  A cycle or a disconnection is
    /// reported with a witness: either a cycle's vertex labels or a pair
    /// of vertices in different components.
    pub fn new(graph: Graph) -> Result<Tree> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::TooFewVertices(0, 1));
        }
        let comps = graph.components();
        if comps.len() > 1 {
            let a = comps[0].min_index().unwrap();
            let b = comps[1].min_index().unwrap();
            return Err(Error::DisconnectedTree(
                graph.universe().label(a).to_string(),
                graph.universe().label(b).to_string(),
            ));
        }
        if graph.edge_count() != n - 1 {
            // Connected with too many edges: exhibit a cycle via DFS.
            let cycle = find_cycle(&graph).expect("connected graph with ≥ n edges has a cycle");
            let rendered = cycle
                .iter()
                .map(|&v| graph.universe().label(v).to_string())
                .collect::<Vec<_>>()
                .join("-");
            return Err(Error::CycleInTree(rendered));
        }
        Ok(Tree { graph })
    }

    /// Build a tree directly from label pairs.
    pub fn from_label_pairs<'a, I: IntoIterator<Item = (&'a str, &'a str)>>(
        universe: Labeling,
        pairs: I,
    ) -> Result<Tree> {
        Tree::new(Graph::from_label_pairs(universe, pairs)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn universe(&self) -> &Labeling {
        self.graph.universe()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The unique path between two vertices, as a vertex list.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        self.graph
            .shortest_path(from, to)
            .expect("a tree is connected")
    }

    /// Tree distance (edge count of the unique path).
    pub fn distance(&self, from: usize, to: usize) -> usize {
        self.path(from, to).len() - 1
    }

    /// Leaves: vertices of degree one.  (A single isolated vertex has no
    /// leaves under this definition; `K₂` has two.)
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.graph.degree(v) == 1)
            .collect()
    }
}

/// Find any cycle in a graph, as the vertex sequence around the cycle.
fn find_cycle(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut visited = VertexSet::EMPTY;
    for root in 0..n {
        if visited.contains(root) {
            continue;
        }
        visited = visited.insert(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for u in graph.neighbors(v).iter() {
                if Some(u) == parent[v] {
                    continue;
                }
                if visited.contains(u) {
                    // Found a non-tree edge v—u: walk both ancestries.
                    let mut av = ancestry(&parent, v);
                    let au = ancestry(&parent, u);
                    // Trim to paths from the lowest common ancestor.
                    let common: Vec<usize> = au
                        .iter()
                        .copied()
                        .filter(|x| av.contains(x))
                        .collect();
                    let lca = *common.first()?;
                    av.truncate(av.iter().position(|&x| x == lca)? + 1);
                    let mut cycle = av;
                    for &x in au.iter().take_while(|&&x| x != lca) {
                        cycle.insert(0, x);
                    }
                    return Some(cycle);
                }
                visited = visited.insert(u);
                parent[u] = Some(v);
                stack.push(u);
            }
        }
    }
    None
}

/// Path from a vertex up to its DFS root: `[v, parent(v), …, root]`.
fn ancestry(parent: &[Option<usize>], mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while let Some(p) = parent[v] {
        out.push(p);
        v = p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    fn path_graph(n: usize) -> Graph {
        let lab = Labeling::numeric(n).unwrap();
        let edges: Vec<VertexSet> = (0..n - 1).map(|i| vs(&[i, i + 1])).collect();
        Graph::new(lab, edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let lab = Labeling::numeric(3).unwrap();
        assert!(matches!(
            Graph::new(lab.clone(), [vs(&[0])]),
            Err(Error::NotTwoElementEdge(_))
        ));
        assert!(matches!(
            Graph::new(lab, [vs(&[0, 1]), vs(&[0, 1])]),
            Err(Error::DuplicateEdge(_))
        ));
    }

    #[test]
    fn adjacency_and_connectivity() {
        let g = path_graph(4);
        assert_eq!(g.neighbors(1), vs(&[0, 2]));
        assert_eq!(g.closed_neighbors(1), vs(&[0, 1, 2]));
        assert!(g.is_connected());
        assert_eq!(g.bfs_distances(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        assert_eq!(g.shortest_path(0, 3), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn components_of_a_disconnected_graph() {
        let lab = Labeling::numeric(5).unwrap();
        let g = Graph::new(lab, [vs(&[0, 1]), vs(&[3, 4])]).unwrap();
        assert_eq!(g.components(), vec![vs(&[0, 1]), vs(&[2]), vs(&[3, 4])]);
        assert!(!g.is_connected());
    }

    #[test]
    fn bipartition_of_even_cycle_and_failure_on_triangle() {
        let lab = Labeling::numeric(4).unwrap();
        let c4 = Graph::new(
            lab.clone(),
            [vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[0, 3])],
        )
        .unwrap();
        assert_eq!(c4.bipartition(), Some((vs(&[0, 2]), vs(&[1, 3]))));
        let lab3 = Labeling::numeric(3).unwrap();
        let triangle = Graph::complete(lab3);
        assert_eq!(triangle.bipartition(), None);
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let g = path_graph(4);
        let sub = g.induced(vs(&[1, 2, 3])).unwrap();
        assert_eq!(sub.universe().labels(), &["2", "3", "4"]);
        assert_eq!(sub.edges(), &[vs(&[0, 1]), vs(&[1, 2])]);
    }

    #[test]
    fn tree_validation_reports_witnesses() {
        let lab = Labeling::numeric(3).unwrap();
        let triangle = Graph::complete(lab.clone());
        match Tree::new(triangle) {
            Err(Error::CycleInTree(c)) => assert!(!c.is_empty()),
            other => panic!("expected cycle witness, got {other:?}"),
        }
        let forest = Graph::new(lab, [vs(&[0, 1])]).unwrap();
        match Tree::new(forest) {
            Err(Error::DisconnectedTree(a, b)) => {
                assert_eq!((a.as_str(), b.as_str()), ("1", "3"));
            }
            other => panic!("expected disconnection witness, got {other:?}"),
        }
    }

    #[test]
    fn tree_paths_and_leaves() {
        let lab = Labeling::numeric(4).unwrap();
        let star =
            Tree::new(Graph::new(lab, [vs(&[0, 1]), vs(&[0, 2]), vs(&[0, 3])]).unwrap()).unwrap();
        assert_eq!(star.path(1, 3), vec![1, 0, 3]);
        assert_eq!(star.distance(1, 3), 2);
        assert_eq!(star.leaves(), vec![1, 2, 3]);
    }
}
