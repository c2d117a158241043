//! The generic graph of a tree: for every tree edge `{i,j}` two vertices
//! `x_{i,j}` and `x_{j,i}`, with `{x_{i,k}, x_{j,l}}` an edge exactly when
//! `k` is the second vertex of the tree path from `i` to `j` and `l` the
//! second-to-last.  Also: the symbolic generic matrix whose rows are the
//! tree edges, out-tree orientation assignments, a bundled structural
//! report, canonical tree codes, and labeled-tree enumeration.

use std::collections::HashMap;

use crate::base::{Clutter, Graph, Labeling, Tree, VertexSet};
use crate::clutters::independence_complex;
use crate::error::{Error, Result};
use crate::graphs::{diameter, is_ess_graph};
use crate::shelling::{
    codim_one_graph, facet_distance, verify_strong_order, FacetOrder, OrderStatus, Verified,
};
use crate::SimplicialComplex;

/// The second and second-to-last vertices of the unique tree path from
/// `i` to `j` (for adjacent vertices both collapse to the other endpoint).
pub fn path_ends(tree: &Tree, i: usize, j: usize) -> Result<(usize, usize)> {
    tree.universe().check_vertex(i)?;
    tree.universe().check_vertex(j)?;
    if i == j {
        return Err(Error::IdenticalPathEndpoints);
    }
    let path = tree.path(i, j);
    Ok((path[1], path[path.len() - 2]))
}

/// The generic graph `G_T` of a tree together with the bookkeeping that
/// ties its vertices back to ordered tree-edge pairs.
#[derive(Clone, Debug)]
pub struct GenericGraph {
    tree: Tree,
    graph: Graph,
    /// `pairs[v] = (i, j)` meaning generic vertex `v` is `x_{i,j}`
    /// (tree vertex indices).
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl GenericGraph {
    /// Build `G_T`.  Requires at least two tree vertices (one tree edge).
    pub fn new(tree: &Tree) -> Result<GenericGraph> {
        let n = tree.vertex_count();
        if n < 2 {
            return Err(Error::TooFewVertices(2, n));
        }
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(2 * (n - 1));
        for &edge in tree.graph().edges() {
            let mut it = edge.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            pairs.push((a, b));
            pairs.push((b, a));
        }
        let index: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(v, &p)| (p, v)).collect();
        let labels: Vec<String> = pairs
            .iter()
            .map(|&(i, j)| {
                format!(
                    "x_{{{},{}}}",
                    tree.universe().label(i),
                    tree.universe().label(j)
                )
            })
            .collect();
        let universe = Labeling::new(labels)?;

        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let (b, e) = path_ends(tree, i, j)?;
                let u = index[&(i, b)];
                let v = index[&(j, e)];
                edges.push(VertexSet::from_indices([u, v]));
            }
        }
        let graph = Graph::new(universe, edges)?;
        Ok(GenericGraph {
            tree: tree.clone(),
            graph,
            pairs,
            index,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The ordered tree-edge pair behind a generic vertex.
    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    /// The generic vertex for an ordered tree-edge pair, if `{i,j}` is a
    /// tree edge.
    pub fn vertex_of_pair(&self, i: usize, j: usize) -> Option<usize> {
        self.index.get(&(i, j)).copied()
    }

    /// The out-tree orientation assignment rooted at a tree vertex:
    /// `x_{u₁,u₂}` is selected iff `u₁` is closer to the root.  One
    /// generic vertex per tree edge, so the assignment has `n − 1`
    /// elements.
    pub fn out_tree_assignment(&self, root: usize) -> Result<OrientationAssignment> {
        self.tree.universe().check_vertex(root)?;
        let mut set = VertexSet::EMPTY;
        for (v, &(a, b)) in self.pairs.iter().enumerate() {
            if self.tree.distance(root, a) < self.tree.distance(root, b) {
                set = set.insert(v);
            }
        }
        Ok(OrientationAssignment { vertices: set })
    }
}

/// A choice of one of `x_{u,v}`, `x_{v,u}` per tree edge, as a vertex set
/// of the generic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientationAssignment {
    vertices: VertexSet,
}

impl OrientationAssignment {
    pub fn vertices(self) -> VertexSet {
        self.vertices
    }
}

/// One signed symbolic entry of the generic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedSymbol {
    pub negative: bool,
    pub symbol: String,
}

impl SignedSymbol {
    pub fn render(&self) -> String {
        if self.negative {
            format!("-{}", self.symbol)
        } else {
            self.symbol.clone()
        }
    }
}

/// The symbolic generic matrix `A(T)`: one row per tree edge `{i,j}`
/// (`i < j`, canonical edge order) holding `−x_{i,j}` in column `i` and
/// `x_{j,i}` in column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    columns: Labeling,
    /// Per row: the tree edge and its two `(column, entry)` pairs.
    rows: Vec<(VertexSet, [(usize, SignedSymbol); 2])>,
}

impl GenericMatrix {
    /// Column labels (the tree vertices).
    pub fn columns(&self) -> &Labeling {
        &self.columns
    }

    pub fn rows(&self) -> &[(VertexSet, [(usize, SignedSymbol); 2])] {
        &self.rows
    }

    /// The full entry grid, `None` for structural zeros.
    pub fn grid(&self) -> Vec<Vec<Option<SignedSymbol>>> {
        let n = self.columns.len();
        self.rows
            .iter()
            .map(|(_, entries)| {
                let mut row: Vec<Option<SignedSymbol>> = vec![None; n];
                for (col, entry) in entries {
                    row[*col] = Some(entry.clone());
                }
                row
            })
            .collect()
    }

    /// Aligned plain-text rendering with `0` for structural zeros.
    pub fn render_text(&self) -> String {
        let grid = self.grid();
        let n = self.columns.len();
        let cell = |entry: &Option<SignedSymbol>| -> String {
            entry.as_ref().map_or_else(|| "0".to_string(), SignedSymbol::render)
        };
        let widths: Vec<usize> = (0..n)
            .map(|c| grid.iter().map(|row| cell(&row[c]).len()).max().unwrap_or(1))
            .collect();
        grid.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(c, e)| format!("{:>width$}", cell(e), width = widths[c]))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The generic matrix of a tree.
pub fn generic_matrix(tree: &Tree) -> Result<GenericMatrix> {
    let n = tree.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(2, n));
    }
    let symbol = |i: usize, j: usize| {
        format!(
            "x_{{{},{}}}",
            tree.universe().label(i),
            tree.universe().label(j)
        )
    };
    let rows = tree
        .graph()
        .edges()
        .iter()
        .map(|&edge| {
            let mut it = edge.iter();
            let (i, j) = (it.next().unwrap(), it.next().unwrap());
            (
                edge,
                [
                    (
                        i,
                        SignedSymbol {
                            negative: true,
                            symbol: symbol(i, j),
                        },
                    ),
                    (
                        j,
                        SignedSymbol {
                            negative: false,
                            symbol: symbol(j, i),
                        },
                    ),
                ],
            )
        })
        .collect();
    Ok(GenericMatrix {
        columns: tree.universe().clone(),
        rows,
    })
}

/// Exact clique number by branch and bound over candidate sets.
pub fn clique_number(graph: &Graph) -> usize {
    fn extend(graph: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
        *best = (*best).max(size);
        let mut rest = candidates;
        while let Some(v) = rest.min_index() {
            if size + rest.len() <= *best {
                // Even taking every remaining candidate cannot improve.
                return;
            }
            rest = rest.remove(v);
            extend(graph, size + 1, rest.intersection(graph.neighbors(v)), best);
        }
    }
    let mut best = 0;
    extend(graph, 0, graph.universe().full_set(), &mut best);
    best
}

/// The bundled structural report for a tree's generic graph.  Data fields
/// carry the computed objects; [`GtReport::checks`] lists the named claims
/// with their outcomes.
#[derive(Clone, Debug)]
pub struct GtReport {
    pub generic: GenericGraph,
    pub clique_number: usize,
    pub tree_leaf_count: usize,
    pub generic_leaf_count: usize,
    /// `None` when the tree has only 2 vertices (the diameter claim needs
    /// at least 3).
    pub diameter: Option<usize>,
    /// Strong shelling certificate for the edge complex of `G_T`.
    pub ess_order: Option<FacetOrder>,
    /// The independence complex of `G_T`.
    pub independence: SimplicialComplex,
    /// Do the independence facets coincide with the out-tree assignments?
    pub independence_matches_assignments: bool,
    /// Strong shelling of the independence complex along a connected
    /// vertex order of the tree.
    pub independence_order: Option<FacetOrder>,
    /// Does `facet_distance(A_u, A_v) = dist_T(u, v)` for all `u, v`?
    pub distances_match: bool,
    pub codim_graph_isomorphic_to_tree: bool,
}

impl GtReport {
    /// Named claim outcomes, in a fixed order.  The diameter claim is
    /// omitted for two-vertex trees.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let n = self.generic.tree().vertex_count();
        let mut out = vec![
            (
                "clique number equals tree leaf count",
                self.clique_number == self.tree_leaf_count,
            ),
            (
                "clique number equals generic-graph leaf count",
                self.clique_number == self.generic_leaf_count,
            ),
            ("generic graph is connected", self.generic.graph().is_connected()),
            (
                "generic graph is edgewise strongly shellable",
                self.ess_order.is_some(),
            ),
            (
                "independence complex is pure of dimension n-2",
                self.independence.is_pure() && self.independence.dim() == Some(n as i64 - 2),
            ),
            (
                "independence complex has exactly n facets",
                self.independence.facet_count() == n,
            ),
            (
                "independence facets are the out-tree assignments",
                self.independence_matches_assignments,
            ),
            (
                "connected vertex order gives a strong shelling",
                self.independence_order.is_some(),
            ),
            (
                "facet distances equal tree distances",
                self.distances_match,
            ),
            (
                "codimension-one graph is isomorphic to the tree",
                self.codim_graph_isomorphic_to_tree,
            ),
        ];
        if n >= 3 {
            out.insert(2, ("diameter is 3", self.diameter == Some(3)));
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

/// Build the full report for a tree (at least 2 vertices).
pub fn gt_report(tree: &Tree) -> Result<GtReport> {
    let n = tree.vertex_count();
    let generic = GenericGraph::new(tree)?;
    let g = generic.graph();

    let tree_leaf_count = tree.leaves().len();
    let generic_leaf_count = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .count();
    let report_diameter = if n >= 3 { diameter(g) } else { None };
    let ess_order = is_ess_graph(g)?;

    let edge_clutter = Clutter::from_antichain(g.universe().clone(), g.edges().to_vec());
    let independence = independence_complex(&edge_clutter);

    let assignments: Vec<VertexSet> = (0..n)
        .map(|v| generic.out_tree_assignment(v).map(|a| a.vertices()))
        .collect::<Result<_>>()?;
    let mut sorted_assignments = assignments.clone();
    crate::base::vset::sort_canonically(&mut sorted_assignments);
    let independence_matches_assignments = independence.facets() == sorted_assignments.as_slice();

    let independence_order = if independence_matches_assignments {
        connected_order_shelling(tree, &independence, &assignments)?
    } else {
        None
    };

    let mut distances_match = true;
    'outer: for u in 0..n {
        for v in 0..n {
            let fd = facet_distance(assignments[u], assignments[v])?;
            if fd != tree.distance(u, v) {
                distances_match = false;
                break 'outer;
            }
        }
    }

    let codim_graph_isomorphic_to_tree = match codim_one_graph(&independence) {
        Ok(gamma) => match Tree::new(gamma) {
            Ok(gamma_tree) => canonical_code(&gamma_tree) == canonical_code(tree),
            Err(_) => false,
        },
        Err(_) => false,
    };

    let clique = clique_number(g);
    Ok(GtReport {
        generic,
        clique_number: clique,
        tree_leaf_count,
        generic_leaf_count,
        diameter: report_diameter,
        ess_order,
        independence,
        independence_matches_assignments,
        independence_order,
        distances_match,
        codim_graph_isomorphic_to_tree,
    })
}

/// Arrange the independence facets along a breadth-first (hence
/// connected-prefix) vertex order of the tree and verify the strong
/// shelling condition.
fn connected_order_shelling(
    tree: &Tree,
    independence: &SimplicialComplex,
    assignments: &[VertexSet],
) -> Result<Option<FacetOrder>> {
    let bfs = {
        let dist = tree.graph().bfs_distances(0);
        let mut order: Vec<usize> = (0..tree.vertex_count()).collect();
        order.sort_by_key(|&v| (dist[v].expect("trees are connected"), v));
        order
    };
    let facet_index = |set: VertexSet| -> usize {
        independence
            .facets()
            .iter()
            .position(|&f| f == set)
            .expect("assignments equal the facet set")
    };
    let order: Vec<usize> = bfs.into_iter().map(|v| facet_index(assignments[v])).collect();
    match verify_strong_order(independence, &order)? {
        Verified::Valid => Ok(Some(FacetOrder::with_status(
            independence.clone(),
            order,
            OrderStatus::StrongShelling,
        ))),
        Verified::FirstViolation { .. } => Ok(None),
    }
}

/// Canonical form for a tree under isomorphism: the AHU code rooted at the
/// tree's center (or the smaller of the two codes for bicentral trees).
pub fn canonical_code(tree: &Tree) -> String {
    let centers = tree_centers(tree);
    centers
        .into_iter()
        .map(|c| ahu_code(tree, c))
        .min()
        .expect("a tree has one or two centers")
}

/// Are two trees isomorphic?
pub fn trees_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b)
}

/// The one or two middle vertices of a tree, found by repeatedly peeling
/// leaves.
fn tree_centers(tree: &Tree) -> Vec<usize> {
    let g = tree.graph();
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            removed[leaf] = true;
            remaining -= 1;
            for u in g.neighbors(leaf).iter() {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// The Aho–Hopcroft–Ullman code of a tree rooted at `root`: leaves are
/// `()`, inner vertices wrap the sorted child codes.
fn ahu_code(tree: &Tree, root: usize) -> String {
    fn code(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&u| Some(u) != parent)
            .map(|u| code(g, u, Some(v)))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    code(tree.graph(), root, None)
}

/// Maximum vertex count accepted by [`labeled_trees`] (the enumeration has
/// `n^(n-2)` members).
pub const MAX_ENUMERATED_TREE_VERTICES: usize = 9;

/// Every tree on the labeled vertex set `1..=n`, decoded from all
/// Prüfer sequences.  `n = 1` and `n = 2` yield the unique trees.
pub fn labeled_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::TooFewVertices(1, 0));
    }
    if n > MAX_ENUMERATED_TREE_VERTICES {
        return Err(Error::OracleTooLarge(n, MAX_ENUMERATED_TREE_VERTICES));
    }
    let universe = Labeling::numeric(n)?;
    if n == 1 {
        return Ok(vec![Tree::new(Graph::edgeless(universe))?]);
    }
    let mut out = Vec::new();
    let len = n - 2;
    let count = n.pow(len as u32);
    let mut sequence = vec![0usize; len];
    for code in 0..count {
        let mut rem = code;
        for slot in sequence.iter_mut() {
            *slot = rem % n;
            rem /= n;
        }
        out.push(tree_from_pruefer(&universe, &sequence)?);
    }
    Ok(out)
}

fn tree_from_pruefer(universe: &Labeling, sequence: &[usize]) -> Result<Tree> {
    let n = universe.len();
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in sequence {
        let leaf = (0..n)
            .find(|&v| !used[v] && degree[v] == 1)
            .expect("a leaf always remains while decoding");
        edges.push(VertexSet::from_indices([leaf, s]));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    edges.push(VertexSet::from_indices([last[0], last[1]]));
    Tree::new(Graph::new(universe.clone(), edges)?)
}
