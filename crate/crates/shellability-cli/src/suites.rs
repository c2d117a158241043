//! Batch verification suites.  Each function sweeps a family of inputs —
//! exhaustive where the space is small, seeded-random where it is not —
//! through a cluster of predicates that must agree, and reports every
//! disagreement it finds.  All randomness comes from a ChaCha stream
//! seeded explicitly, so every run is reproducible.

use std::collections::HashSet;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use shellability::base::{k_subsets, Clutter, Graph, Labeling, SimplicialComplex, Tree, VertexSet};
use shellability::bipartite::{
    construct_from_sequences, eccentric_center, is_ferrers, lex_strong_shelling,
    recover_sequences, UpwardSequences,
};
use shellability::clutters::{complete_clutter, e_chordal_peo, is_w_chordal, layered_matroid};
use shellability::complexes::{complement_complex, dual_of_independence, expand};
use shellability::generic_tree::{generic_matrix, gt_report, labeled_trees};
use shellability::graphs::{
    blow_up, complement_graph, edge_complex, find_peo, peo_to_strong_shelling, quotient_graph,
    QuotientMap,
};
use shellability::ideals::{
    alexander_dual, edge_ideal, facet_ideal, find_linear_quotients, linear_quotients_in_order,
    oracle_alexander_dual, MonomialIdeal,
};
use shellability::shelling::{
    find_shelling, find_strong_shelling, oracle_strong_shellable, verify_strong_order,
};
use shellability::Result;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 42;

/// How many failure descriptions a report keeps verbatim.
const MAX_SAMPLE_FAILURES: usize = 16;

/// Expanded complexes are capped at the order-search limit so every
/// expansion the suite builds can still be searched exhaustively.
const MAX_EXPANSION_FACETS: usize = 128;

/// Outcome of one suite run: how many checks executed, how many failed,
/// and a capped sample of failure descriptions.
#[derive(Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failure_count: usize,
    pub sample_failures: Vec<String>,
    pub ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn render_text(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let mut out = format!(
            "suite {}: {} — {} checks, {} failures ({} ms)",
            self.name, verdict, self.checked, self.failure_count, self.ms
        );
        for failure in &self.sample_failures {
            out.push_str("\n  ");
            out.push_str(failure);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "passed": self.passed(),
            "checked": self.checked,
            "failures": self.failure_count,
            "sample_failures": self.sample_failures,
            "ms": self.ms as u64,
        })
    }
}

/// Accumulates per-item outcomes while a suite runs.
struct Recorder {
    name: &'static str,
    checked: usize,
    failure_count: usize,
    samples: Vec<String>,
    started: Instant,
}

impl Recorder {
    fn new(name: &'static str) -> Recorder {
        Recorder {
            name,
            checked: 0,
            failure_count: 0,
            samples: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Run one check.  `Ok(None)` is a pass, `Ok(Some(msg))` a failure,
    /// and a library error is recorded as a failure too — suites only
    /// feed inputs that every predicate should accept.
    fn item<F>(&mut self, f: F)
    where
        F: FnOnce() -> Result<Option<String>>,
    {
        self.checked += 1;
        match f() {
            Ok(None) => {}
            Ok(Some(message)) => self.fail(message),
            Err(error) => self.fail(format!("unexpected error: {error}")),
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.samples.len() < MAX_SAMPLE_FAILURES {
            self.samples.push(message);
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            checked: self.checked,
            failure_count: self.failure_count,
            sample_failures: self.samples,
            ms: self.started.elapsed().as_millis(),
        }
    }
}

// ---------------------------------------------------------------------------
// Shared generators
// ---------------------------------------------------------------------------

fn numeric(n: usize) -> Labeling {
    Labeling::numeric(n).expect("small numeric labelings are valid")
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Graph on `n` numeric vertices whose edges are the set bits of `mask`,
/// enumerating pairs `(a, b)` with `a < b` in lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push(VertexSet::from_indices([a, b]));
            }
            bit += 1;
        }
    }
    Graph::new(numeric(n), edges).expect("mask bits encode simple edges")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let bits = pair_count(n);
    let mask = if bits == 0 {
        0
    } else {
        rng.gen::<u64>() & ((1u64 << bits) - 1)
    };
    graph_from_mask(n, mask)
}

/// Random pure complex: `k`-subsets of an `n`-element universe with
/// `2 ≤ n ≤ max_vertices` and at most `max_facets` facets.
fn random_pure_complex(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_facets: usize,
) -> SimplicialComplex {
    let n = rng.gen_range(2..=max_vertices);
    let k = rng.gen_range(1..=n);
    let pool = k_subsets(n, k);
    let count = rng.gen_range(1..=max_facets.min(pool.len()));
    let picks = rand::seq::index::sample(rng, pool.len(), count);
    let facets: Vec<VertexSet> = picks.iter().map(|i| pool[i]).collect();
    SimplicialComplex::new(numeric(n), facets).expect("equal-size sets form an antichain")
}

/// The path complex on `n` vertices: facets `{1,2}, {2,3}, …, {n−1,n}`.
fn path_complex(n: usize) -> SimplicialComplex {
    let facets = (0..n - 1).map(|i| VertexSet::from_indices([i, i + 1]));
    SimplicialComplex::new(numeric(n), facets).expect("path facets form an antichain")
}

/// Facet count of the `s`-expansion without building it.
fn expansion_facet_count(complex: &SimplicialComplex, s: &[usize]) -> usize {
    complex
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| s[v]).product::<usize>())
        .sum()
}

// ---------------------------------------------------------------------------
// Suite: path-boundary
// ---------------------------------------------------------------------------

/// The path complexes `L_2 … L_8`: strongly shellable exactly up to
/// `L_4`, plain shellable throughout.
pub fn path_boundary() -> SuiteReport {
    let mut r = Recorder::new("path-boundary");
    for n in 2..=8usize {
        r.item(|| {
            let complex = path_complex(n);
            let strong = find_strong_shelling(&complex)?.is_some();
            let expected = n <= 4;
            Ok((strong != expected).then(|| {
                format!("L_{n}: strong shelling search returned {strong}, expected {expected}")
            }))
        });
        r.item(|| {
            let complex = path_complex(n);
            let plain = find_shelling(&complex)?.is_some();
            Ok((!plain).then(|| format!("L_{n}: no plain shelling found")))
        });
    }
    r.finish()
}

// ---------------------------------------------------------------------------
// Suite: equivalence5
// ---------------------------------------------------------------------------

/// On every graph with 5 vertices, and on `random_count` random graphs
/// with 7 vertices, the four characterizations of edgewise strong
/// shellability must agree: order search on the edge complex, a perfect
/// elimination order of the complement, the elimination-order
/// construction, and linear quotients of the edge ideal.
pub fn equivalence5(seed: u64, random_count: usize) -> SuiteReport {
    let mut r = Recorder::new("equivalence5");
    for mask in 0..1u64 << pair_count(5) {
        check_four_predicates(&mut r, graph_from_mask(5, mask));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_count {
        check_four_predicates(&mut r, random_graph(&mut rng, 7));
    }
    r.finish()
}

fn check_four_predicates(r: &mut Recorder, graph: Graph) {
    r.item(move || {
        let search = find_strong_shelling(&edge_complex(&graph))?.is_some();
        let elimination = find_peo(&complement_graph(&graph)).is_chordal();
        let construction = peo_to_strong_shelling(&graph)?.is_some();
        let quotients = find_linear_quotients(&edge_ideal(&graph))?.is_some();
        let agree = search == elimination && search == construction && search == quotients;
        Ok((!agree).then(|| {
            format!(
                "{}: search={search} complement-elimination={elimination} \
                 construction={construction} linear-quotients={quotients}",
                graph.render_edges()
            )
        }))
    });
}

// ---------------------------------------------------------------------------
// Suite: oracle agreement
// ---------------------------------------------------------------------------

/// The permutation oracle agrees with the incremental order search on
/// every complex with at most 6 facets drawn from the path sweep, the
/// 5-vertex graph sweep, the seeded 7-vertex sample, and `random_count`
/// extra random pure complexes.
pub fn oracle_agreement(seed: u64, random_count: usize) -> SuiteReport {
    let mut r = Recorder::new("oracle-agreement");
    let mut pool: Vec<SimplicialComplex> = Vec::new();
    for n in 2..=7usize {
        pool.push(path_complex(n));
    }
    for mask in 0..1u64 << pair_count(5) {
        let graph = graph_from_mask(5, mask);
        if graph.edge_count() <= 6 {
            pool.push(edge_complex(&graph));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let graph = random_graph(&mut rng, 7);
        if graph.edge_count() <= 6 {
            pool.push(edge_complex(&graph));
        }
    }
    for _ in 0..random_count {
        pool.push(random_pure_complex(&mut rng, 5, 6));
    }
    for complex in pool {
        r.item(move || {
            let brute = oracle_strong_shellable(&complex)?;
            let search = find_strong_shelling(&complex)?.is_some();
            Ok((brute != search).then(|| {
                format!(
                    "{}: oracle says {brute}, search says {search}",
                    complex.render_facets()
                )
            }))
        });
    }
    r.finish()
}

// ---------------------------------------------------------------------------
// Suite: clutter-chordal
// ---------------------------------------------------------------------------

/// Chordality of clutters forces strong shellability of the dual of the
/// independence complex; complete clutters admit simplicial elimination
/// orders; layered transversal matroid complexes are strongly shellable.
pub fn clutter_chordal(seed: u64, random_count: usize) -> SuiteReport {
    let mut r = Recorder::new("clutter-chordal");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_count {
        let n = rng.gen_range(3..=6);
        let pool = k_subsets(n, 3);
        let count = rng.gen_range(1..=pool.len());
        let picks = rand::seq::index::sample(&mut rng, pool.len(), count);
        let edges: Vec<VertexSet> = picks.iter().map(|i| pool[i]).collect();
        let clutter = Clutter::new(numeric(n), edges).expect("uniform families are antichains");
        r.item(move || {
            let chordal = is_w_chordal(&clutter)?.holds() || e_chordal_peo(&clutter)?.is_some();
            if !chordal {
                return Ok(None);
            }
            let dual = dual_of_independence(&clutter, 3)?;
            let strong = find_strong_shelling(&dual)?.is_some();
            Ok((!strong).then(|| {
                format!(
                    "{}: chordal clutter whose independence dual is not strongly shellable",
                    clutter.render_edges()
                )
            }))
        });
    }
    for n in 1..=6usize {
        for d in 0..=3.min(n) {
            r.item(move || {
                let clutter = complete_clutter(n, d)?;
                let peo = e_chordal_peo(&clutter)?;
                Ok(peo.is_none().then(|| {
                    format!("complete clutter n={n} d={d}: no simplicial elimination order")
                }))
            });
        }
    }
    for total in 2..=6usize {
        for xs in 1..total {
            let ys = total - xs;
            let x = VertexSet::from_indices(0..xs);
            let y = VertexSet::from_indices(xs..total);
            for lambda in 1..=total {
                let lo = lambda.saturating_sub(ys);
                let hi = lambda.min(xs);
                for i in lo..=hi {
                    for j in i..=hi {
                        r.item(move || {
                            let matroid = layered_matroid(&numeric(total), x, y, lambda, i, j)?;
                            let strong = find_strong_shelling(&matroid)?.is_some();
                            Ok((!strong).then(|| {
                                format!(
                                    "layered matroid |X|={xs} |Y|={ys} λ={lambda} i={i} j={j}: \
                                     not strongly shellable"
                                )
                            }))
                        });
                    }
                }
            }
        }
    }
    r.finish()
}

// ---------------------------------------------------------------------------
// Suite: expansion (complements and expansions)
// ---------------------------------------------------------------------------

/// Strong shellability is invariant under complementation (always
/// checked) and under expansion with multiplicities ≤ 2 (checked for the
/// first `expansion_count` complexes of the sweep).
pub fn expansion(seed: u64, complement_count: usize, expansion_count: usize) -> SuiteReport {
    let mut r = Recorder::new("expansion");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..complement_count {
        let complex = random_pure_complex(&mut rng, 5, 6);
        let n = complex.universe().len();
        let mut s: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        while expansion_facet_count(&complex, &s) > MAX_EXPANSION_FACETS {
            let pos = s
                .iter()
                .position(|&m| m > 1)
                .expect("an oversized expansion has a multiplicity above 1");
            s[pos] = 1;
        }
        let for_complement = complex.clone();
        r.item(move || {
            let base = find_strong_shelling(&for_complement)?.is_some();
            let complemented = find_strong_shelling(&complement_complex(&for_complement)?)?
                .is_some();
            Ok((base != complemented).then(|| {
                format!(
                    "{}: strongly shellable {base} but complement {complemented}",
                    for_complement.render_facets()
                )
            }))
        });
        if round < expansion_count {
            r.item(move || {
                let base = find_strong_shelling(&complex)?.is_some();
                let expanded = expand(&complex, &s)?;
                let after = find_strong_shelling(expanded.expanded())?.is_some();
                Ok((base != after).then(|| {
                    format!(
                        "{} with multiplicities {s:?}: strongly shellable {base} \
                         but expansion {after}",
                        complex.render_facets()
                    )
                }))
            });
        }
    }
    r.finish()
}

// ---------------------------------------------------------------------------
// Suite: trees7
// ---------------------------------------------------------------------------

/// Every labeled tree up to `max_vertices` vertices passes the full
/// generic-graph report, the enumeration sizes follow Cayley's formula,
/// and the generic matrices of the two worked 4-vertex trees match their
/// frozen symbol tables.
pub fn trees(max_vertices: usize) -> SuiteReport {
    let mut r = Recorder::new("trees7");
    let max_vertices = max_vertices.clamp(3, 9);
    for n in 1..=max_vertices {
        r.item(move || {
            let trees = labeled_trees(n)?;
            let expected = if n == 1 {
                1
            } else {
                (n as u64).pow(n as u32 - 2) as usize
            };
            Ok((trees.len() != expected).then(|| {
                format!(
                    "n={n}: enumerated {} labeled trees, Cayley's formula gives {expected}",
                    trees.len()
                )
            }))
        });
    }
    for n in 3..=max_vertices {
        let trees = match labeled_trees(n) {
            Ok(trees) => trees,
            Err(error) => {
                r.fail(format!("n={n}: enumeration failed: {error}"));
                continue;
            }
        };
        for (index, tree) in trees.into_iter().enumerate() {
            r.item(move || {
                let report = gt_report(&tree)?;
                let failed: Vec<&str> = report
                    .checks()
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(name, _)| *name)
                    .collect();
                Ok((!failed.is_empty()).then(|| {
                    format!(
                        "tree #{index} on {n} vertices ({}): failed {}",
                        tree.graph().render_edges(),
                        failed.join(", ")
                    )
                }))
            });
        }
    }
    check_frozen_matrix(
        &mut r,
        "path 1-2-3-4",
        &[(0, 1), (1, 2), (2, 3)],
        &[
            ["-x_{1,2}", "x_{2,1}", "0", "0"],
            ["0", "-x_{2,3}", "x_{3,2}", "0"],
            ["0", "0", "-x_{3,4}", "x_{4,3}"],
        ],
    );
    check_frozen_matrix(
        &mut r,
        "star with center 1",
        &[(0, 1), (0, 2), (0, 3)],
        &[
            ["-x_{1,2}", "x_{2,1}", "0", "0"],
            ["-x_{1,3}", "0", "x_{3,1}", "0"],
            ["-x_{1,4}", "0", "0", "x_{4,1}"],
        ],
    );
    r.finish()
}

fn check_frozen_matrix(
    r: &mut Recorder,
    what: &'static str,
    edges: &[(usize, usize)],
    expected: &[[&str; 4]; 3],
) {
    let edges: Vec<VertexSet> = edges
        .iter()
        .map(|&(a, b)| VertexSet::from_indices([a, b]))
        .collect();
    r.item(move || {
        let tree = Tree::new(Graph::new(numeric(4), edges)?)?;
        let matrix = generic_matrix(&tree)?;
        let grid: Vec<Vec<String>> = matrix
            .grid()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|cell| cell.map_or_else(|| "0".to_string(), |s| s.render()))
                    .collect()
            })
            .collect();
        let frozen: Vec<Vec<String>> = expected
            .iter()
            .map(|row| row.iter().map(|s| s.to_string()).collect())
            .collect();
        Ok((grid != frozen).then(|| {
            format!("generic matrix of the {what} deviates from the frozen table: {grid:?}")
        }))
    });
}

// ---------------------------------------------------------------------------
// Suite: preservation
// ---------------------------------------------------------------------------

/// Edgewise strong shellability is preserved by induced subgraphs (all of
/// them, for every sampled graph), by proper quotients, and by blow-ups.
pub fn preservation(
    seed: u64,
    graph_count: usize,
    quotient_count: usize,
    blow_up_count: usize,
) -> SuiteReport {
    let mut r = Recorder::new("preservation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut pool: Vec<Graph> = Vec::new();
    let mut attempts = 0usize;
    while pool.len() < graph_count && attempts < graph_count.max(1) * 1000 {
        attempts += 1;
        let n = rng.gen_range(2..=6);
        let graph = random_graph(&mut rng, n);
        if matches!(shellability::graphs::is_ess_graph(&graph), Ok(Some(_))) {
            pool.push(graph);
        }
    }
    if pool.len() < graph_count {
        r.fail(format!(
            "sampled only {} edgewise strongly shellable graphs out of {graph_count} requested",
            pool.len()
        ));
    }
    if pool.is_empty() {
        return r.finish();
    }

    for graph in &pool {
        let graph = graph.clone();
        r.item(move || {
            let n = graph.vertex_count();
            for bits in 1u64..(1 << n) {
                let keep = VertexSet::from_bits(bits);
                let sub = graph.induced(keep)?;
                if shellability::graphs::is_ess_graph(&sub)?.is_none() {
                    return Ok(Some(format!(
                        "{}: induced subgraph on {} is not edgewise strongly shellable",
                        graph.render_edges(),
                        graph.universe().render_set(keep)
                    )));
                }
            }
            Ok(None)
        });
    }

    let mut built = 0usize;
    let mut attempts = 0usize;
    while built < quotient_count && attempts < quotient_count.max(1) * 1000 {
        attempts += 1;
        let graph = pool[rng.gen_range(0..pool.len())].clone();
        let n = graph.vertex_count();
        if n < 2 {
            continue;
        }
        let parts = rng.gen_range(1..n);
        let mut assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
        for part in 0..parts {
            if !assignment.contains(&part) {
                let slot = rng.gen_range(0..n);
                assignment[slot] = part;
            }
        }
        if (0..parts).any(|part| !assignment.contains(&part)) {
            continue;
        }
        let map = match QuotientMap::new(numeric(parts), assignment.clone()) {
            Ok(map) => map,
            Err(_) => continue,
        };
        let result = match quotient_graph(&graph, &map) {
            Ok(result) => result,
            Err(_) => continue,
        };
        if !result.proper {
            continue;
        }
        built += 1;
        r.item(move || {
            let ess = shellability::graphs::is_ess_graph(&result.graph)?.is_some();
            Ok((!ess).then(|| {
                format!(
                    "{} under {assignment:?}: proper quotient lost edgewise strong shellability",
                    graph.render_edges()
                )
            }))
        });
    }
    if built < quotient_count {
        r.fail(format!(
            "generated only {built} proper quotients out of {quotient_count} requested"
        ));
    }

    for _ in 0..blow_up_count {
        let graph = pool[rng.gen_range(0..pool.len())].clone();
        let n = graph.vertex_count();
        let room = (10 - (n - 1)).min(3);
        let copies = rng.gen_range(1..=room);
        let vertex = rng.gen_range(0..n);
        r.item(move || {
            let blown = blow_up(&graph, vertex, copies)?;
            let ess = shellability::graphs::is_ess_graph(&blown)?.is_some();
            Ok((!ess).then(|| {
                format!(
                    "{}: blowing vertex {} into {copies} copies lost edgewise strong shellability",
                    graph.render_edges(),
                    graph.universe().label(vertex)
                )
            }))
        });
    }

    r.finish()
}

// ---------------------------------------------------------------------------
// Suite: bipartite7
// ---------------------------------------------------------------------------

/// On every connected bipartite graph up to `max_vertices` vertices (one
/// representative per isomorphism class): edgewise strong shellability,
/// decomposability from every vertex, from some vertex, and the Ferrers
/// property all agree; decompositions reconstruct the graph; the
/// lexicographic orders verify; an eccentricity-2 vertex exists.
pub fn bipartite(max_vertices: usize) -> SuiteReport {
    let mut r = Recorder::new("bipartite7");
    let max_vertices = max_vertices.clamp(2, 8);

    for n in 2..=max_vertices.min(5) {
        r.item(move || {
            let classes = connected_bipartite_classes(n, n).len();
            let brute = brute_force_class_count(n);
            Ok((classes != brute).then(|| {
                format!(
                    "n={n}: biadjacency enumeration found {classes} classes, \
                     brute force found {brute}"
                )
            }))
        });
    }

    for graph in connected_bipartite_classes(2, max_vertices) {
        check_bipartite_class(&mut r, graph);
    }

    r.item(|| {
        let sequences = UpwardSequences::new(vec![4, 3, 2], vec![2, 1, 0, 0])?;
        let graph = construct_from_sequences(&sequences)?;
        if graph.vertex_count() != 10 || graph.edge_count() != 15 {
            return Ok(Some(format!(
                "layer-sequence example built {} vertices and {} edges, expected 10 and 15",
                graph.vertex_count(),
                graph.edge_count()
            )));
        }
        let recovery = recover_sequences(&graph, 0)?;
        let Some(decomposition) = recovery.decomposed() else {
            return Ok(Some(
                "layer-sequence example did not decompose from its base vertex".to_string(),
            ));
        };
        let seqs = decomposition.sequences();
        let matches = seqs.d() == [4, 3, 2] && seqs.dprime() == [2, 1, 0, 0];
        Ok((!matches).then(|| {
            format!(
                "layer-sequence example recovered {} instead of d = (4, 3, 2); d' = (2, 1, 0, 0)",
                seqs.render()
            )
        }))
    });

    r.finish()
}

fn check_bipartite_class(r: &mut Recorder, graph: Graph) {
    r.item(move || {
        let n = graph.vertex_count();
        let ess = shellability::graphs::is_ess_graph(&graph)?.is_some();
        let mut decomposable = Vec::with_capacity(n);
        for base in 0..n {
            decomposable.push(recover_sequences(&graph, base)?.holds());
        }
        let from_every = decomposable.iter().all(|&ok| ok);
        let from_some = decomposable.iter().any(|&ok| ok);
        let ferrers = is_ferrers(&graph)?.holds();
        if !(ess == from_every && ess == from_some && ess == ferrers) {
            return Ok(Some(format!(
                "{}: ess={ess} from-every={from_every} from-some={from_some} ferrers={ferrers}",
                graph.render_edges()
            )));
        }
        if !ess {
            return Ok(None);
        }
        for base in 0..n {
            let recovery = recover_sequences(&graph, base)?;
            let decomposition = recovery
                .decomposed()
                .expect("decomposability from every vertex was just established");
            let model = construct_from_sequences(decomposition.sequences())?;
            if model.vertex_count() != n || model.edge_count() != graph.edge_count() {
                return Ok(Some(format!(
                    "{}: reconstruction from vertex {} has wrong size",
                    graph.render_edges(),
                    graph.universe().label(base)
                )));
            }
            let vertex_map = decomposition.vertex_map();
            for edge in model.edges() {
                let mut ends = edge.iter();
                let (a, b) = (
                    ends.next().expect("edges have two ends"),
                    ends.next().expect("edges have two ends"),
                );
                if !graph.has_edge(vertex_map[a], vertex_map[b]) {
                    return Ok(Some(format!(
                        "{}: reconstruction from vertex {} is not an isomorphism",
                        graph.render_edges(),
                        graph.universe().label(base)
                    )));
                }
            }
            let order = lex_strong_shelling(&graph, base)?;
            if !verify_strong_order(order.complex(), order.order())?.is_valid() {
                return Ok(Some(format!(
                    "{}: lexicographic order from vertex {} fails verification",
                    graph.render_edges(),
                    graph.universe().label(base)
                )));
            }
        }
        if eccentric_center(&graph).is_err() {
            return Ok(Some(format!(
                "{}: edgewise strongly shellable but no vertex has eccentricity ≤ 2",
                graph.render_edges()
            )));
        }
        Ok(None)
    });
}

/// One representative per isomorphism class of connected bipartite graphs
/// with `min_vertices ≤ n ≤ max_vertices` vertices, enumerated through
/// biadjacency matrices modulo row and column permutations (and
/// transposition when the sides have equal size).
fn connected_bipartite_classes(min_vertices: usize, max_vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in min_vertices..=max_vertices {
        for a in 1..=n / 2 {
            let b = n - a;
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            for mask in 0..1u64 << (a * b) {
                let rows: Vec<u64> = (0..a)
                    .map(|row| (mask >> (row * b)) & ((1u64 << b) - 1))
                    .collect();
                if !biadjacency_connected(&rows, a, b) {
                    continue;
                }
                if seen.insert(canonical_biadjacency(&rows, a, b)) {
                    out.push(bipartite_graph_from_rows(&rows, a, b));
                }
            }
        }
    }
    out
}

fn biadjacency_connected(rows: &[u64], a: usize, b: usize) -> bool {
    let total = a + b;
    let mut reached = vec![false; total];
    let mut queue = vec![0usize];
    reached[0] = true;
    while let Some(v) = queue.pop() {
        if v < a {
            for j in 0..b {
                if rows[v] >> j & 1 == 1 && !reached[a + j] {
                    reached[a + j] = true;
                    queue.push(a + j);
                }
            }
        } else {
            let j = v - a;
            for (i, row) in rows.iter().enumerate() {
                if row >> j & 1 == 1 && !reached[i] {
                    reached[i] = true;
                    queue.push(i);
                }
            }
        }
    }
    reached.into_iter().all(|seen| seen)
}

/// Minimum over column permutations (rows sorted per permutation, which
/// realizes the minimum over row permutations) and, for square matrices,
/// over transposition.
fn canonical_biadjacency(rows: &[u64], a: usize, b: usize) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    let column_perms = permutations(b);
    let mut consider = |candidate_rows: &[u64]| {
        for perm in &column_perms {
            let mut mapped: Vec<u64> = candidate_rows
                .iter()
                .map(|&row| permute_bits(row, perm))
                .collect();
            mapped.sort_unstable();
            if best.as_ref().map_or(true, |current| mapped < *current) {
                best = Some(mapped);
            }
        }
    };
    consider(rows);
    if a == b {
        let transposed: Vec<u64> = (0..b)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, row)| acc | ((row >> j & 1) << i))
            })
            .collect();
        consider(&transposed);
    }
    best.expect("at least one permutation was considered")
}

fn permute_bits(row: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for (new, &old) in perm.iter().enumerate() {
        if row >> old & 1 == 1 {
            out |= 1 << new;
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn extend(k: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for value in 0..k {
            if !used[value] {
                used[value] = true;
                current.push(value);
                extend(k, current, used, out);
                current.pop();
                used[value] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn bipartite_graph_from_rows(rows: &[u64], a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for j in 0..b {
            if row >> j & 1 == 1 {
                edges.push(VertexSet::from_indices([i, a + j]));
            }
        }
    }
    Graph::new(numeric(a + b), edges).expect("biadjacency rows encode simple edges")
}

/// Count connected bipartite isomorphism classes on `n` vertices by brute
/// force over all labeled graphs and all vertex permutations.
fn brute_force_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let mut pair_index = vec![vec![0usize; n]; n];
    let mut next = 0usize;
    for a in 0..n {
        for b in (a + 1)..n {
            pair_index[a][b] = next;
            pair_index[b][a] = next;
            next += 1;
        }
    }
    let mut canons: HashSet<u64> = HashSet::new();
    for mask in 0..1u64 << pair_count(n) {
        let graph = graph_from_mask(n, mask);
        if !graph.is_connected() || graph.bipartition().is_none() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|perm| {
                let mut mapped = 0u64;
                for a in 0..n {
                    for b in (a + 1)..n {
                        if mask >> pair_index[a][b] & 1 == 1 {
                            mapped |= 1 << pair_index[perm[a]][perm[b]];
                        }
                    }
                }
                mapped
            })
            .min()
            .expect("the identity permutation always exists");
        canons.insert(canon);
    }
    canons.len()
}

// ---------------------------------------------------------------------------
// Suite: ideals
// ---------------------------------------------------------------------------

/// Alexander duality is an involution and agrees with the brute-force
/// dual; every strong shelling order found across the other sweeps gives
/// linear quotients on the corresponding facet ideal.
pub fn ideals(seed: u64, random_count: usize) -> SuiteReport {
    let mut r = Recorder::new("ideals");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..random_count {
        let ideal = if rng.gen() {
            let n = rng.gen_range(2..=7);
            edge_ideal(&random_graph(&mut rng, n))
        } else {
            facet_ideal(&random_pure_complex(&mut rng, 5, 6))
        };
        r.item(move || check_duality(&ideal))
    }

    for n in 2..=8usize {
        let complex = path_complex(n);
        check_transfer(&mut r, complex, format!("path complex L_{n}"));
    }
    for mask in 0..1u64 << pair_count(5) {
        let graph = graph_from_mask(5, mask);
        let source = format!("edge complex of {}", graph.render_edges());
        check_transfer(&mut r, edge_complex(&graph), source);
    }
    for round in 0..100usize {
        let complex = random_pure_complex(&mut rng, 5, 6);
        if round < 25 {
            let n = complex.universe().len();
            let mut s: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
            while expansion_facet_count(&complex, &s) > MAX_EXPANSION_FACETS {
                let pos = s
                    .iter()
                    .position(|&m| m > 1)
                    .expect("an oversized expansion has a multiplicity above 1");
                s[pos] = 1;
            }
            if let Ok(expanded) = expand(&complex, &s) {
                let source = format!("expansion of {}", complex.render_facets());
                check_transfer(&mut r, expanded.expanded().clone(), source);
            }
        }
        let source = format!("random complex {}", complex.render_facets());
        check_transfer(&mut r, complex, source);
    }
    for graph in connected_bipartite_classes(2, 6) {
        let ess = matches!(shellability::graphs::is_ess_graph(&graph), Ok(Some(_)));
        if !ess {
            continue;
        }
        for base in 0..graph.vertex_count() {
            let graph = graph.clone();
            r.item(move || {
                let order = lex_strong_shelling(&graph, base)?;
                let ideal = facet_ideal(order.complex());
                let linear = linear_quotients_in_order(&ideal, order.order())?.is_linear();
                Ok((!linear).then(|| {
                    format!(
                        "{}: lexicographic order from vertex {} fails the linear-quotient test",
                        graph.render_edges(),
                        graph.universe().label(base)
                    )
                }))
            });
        }
    }
    for n in 2..=5usize {
        let trees = match labeled_trees(n) {
            Ok(trees) => trees,
            Err(error) => {
                r.fail(format!("n={n}: tree enumeration failed: {error}"));
                continue;
            }
        };
        for tree in trees {
            r.item(move || {
                let report = gt_report(&tree)?;
                let Some(order) = &report.independence_order else {
                    return Ok(Some(format!(
                        "tree {}: no strong shelling of the independence complex",
                        tree.graph().render_edges()
                    )));
                };
                let ideal = facet_ideal(&report.independence);
                let linear = linear_quotients_in_order(&ideal, order.order())?.is_linear();
                Ok((!linear).then(|| {
                    format!(
                        "tree {}: independence order fails the linear-quotient test",
                        tree.graph().render_edges()
                    )
                }))
            });
        }
    }

    r.finish()
}

fn check_duality(ideal: &MonomialIdeal) -> Result<Option<String>> {
    if ideal.is_zero() {
        return Ok(None);
    }
    let dual = alexander_dual(ideal)?;
    let double = alexander_dual(&dual)?;
    if double.generators() != ideal.generators() {
        return Ok(Some(format!(
            "double dual changed {} into {}",
            ideal.render(),
            double.render()
        )));
    }
    let brute = oracle_alexander_dual(ideal)?;
    if dual.generators() != brute.generators() {
        return Ok(Some(format!(
            "dual of {} disagrees with the brute-force dual",
            ideal.render()
        )));
    }
    Ok(None)
}

/// If the complex admits a strong shelling, the facet ideal must list the
/// facets as generators and the order must produce linear quotients.
fn check_transfer(r: &mut Recorder, complex: SimplicialComplex, source: String) {
    r.item(move || {
        let Some(order) = find_strong_shelling(&complex)? else {
            return Ok(None);
        };
        let ideal = facet_ideal(&complex);
        if ideal.generators() != complex.facets() {
            return Ok(Some(format!(
                "{source}: facet ideal generators differ from the facet list"
            )));
        }
        let linear = linear_quotients_in_order(&ideal, order.order())?.is_linear();
        Ok((!linear).then(|| {
            format!("{source}: strong shelling order fails the linear-quotient test")
        }))
    });
}

// ---------------------------------------------------------------------------
// Named dispatch
// ---------------------------------------------------------------------------

/// The suites reachable from the command line.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "equivalence5",
        "clutter-chordal",
        "trees7",
        "expansion",
        "bipartite7",
        "preservation",
        "ideals",
    ]
}

/// Run a suite by name.  `count` scales the seeded-random portion (or the
/// vertex bound, for the exhaustive suites); `None` keeps the defaults.
pub fn run_named(name: &str, seed: u64, count: Option<usize>) -> Option<SuiteReport> {
    Some(match name {
        "equivalence5" => equivalence5(seed, count.unwrap_or(200)),
        "clutter-chordal" => clutter_chordal(seed, count.unwrap_or(200)),
        "trees7" => trees(count.unwrap_or(7)),
        "expansion" => {
            let total = count.unwrap_or(200);
            expansion(seed, total, total / 2)
        }
        "bipartite7" => bipartite(count.unwrap_or(7)),
        "preservation" => {
            let graphs = count.unwrap_or(100);
            preservation(seed, graphs, graphs / 2, graphs / 2)
        }
        "ideals" => ideals(seed, count.unwrap_or(200)),
        _ => return None,
    })
}
