//! Structured output: JSON encodings that round-trip through the library
//! constructors, and DOT drawings for graphs and facet orders.

use serde_json::{json, Map, Value};

use shellability::base::VertexSet;
use shellability::bipartite::UpwardSequences;
use shellability::error::Result;
use shellability::generic_tree::GenericMatrix;
use shellability::shelling::{codim_one_graph, FacetOrder};
use shellability::{Graph, Labeling, SimplicialComplex};

/// JSON encoding of a graph: vertex labels plus label-pair edges.
pub fn graph_to_json(graph: &Graph) -> Value {
    let vertices: Vec<Value> = graph
        .universe()
        .labels()
        .iter()
        .map(|l| Value::String(l.clone()))
        .collect();
    let edges: Vec<Value> = graph
        .edges()
        .iter()
        .map(|e| {
            Value::Array(
                e.iter()
                    .map(|v| Value::String(graph.universe().label(v).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({ "vertices": vertices, "edges": edges })
}

/// Rebuild a graph from [`graph_to_json`] output.
pub fn graph_from_json(value: &Value) -> Option<Graph> {
    let labels: Vec<String> = value
        .get("vertices")?
        .as_array()?
        .iter()
        .map(|v| v.as_str().map(str::to_string))
        .collect::<Option<_>>()?;
    let universe = Labeling::new(labels).ok()?;
    let mut edges = Vec::new();
    for edge in value.get("edges")?.as_array()? {
        let pair = edge.as_array()?;
        let mut set = VertexSet::EMPTY;
        for token in pair {
            set = set.insert(universe.index_of(token.as_str()?).ok()?);
        }
        edges.push(set);
    }
    Graph::new(universe, edges).ok()
}

/// JSON encoding of a complex: vertex labels plus label-list facets.
pub fn complex_to_json(complex: &SimplicialComplex) -> Value {
    let vertices: Vec<Value> = complex
        .universe()
        .labels()
        .iter()
        .map(|l| Value::String(l.clone()))
        .collect();
    let facets: Vec<Value> = complex
        .facets()
        .iter()
        .map(|f| {
            Value::Array(
                f.iter()
                    .map(|v| Value::String(complex.universe().label(v).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({ "vertices": vertices, "facets": facets })
}

/// Rebuild a complex from [`complex_to_json`] output.
pub fn complex_from_json(value: &Value) -> Option<SimplicialComplex> {
    let labels: Vec<String> = value
        .get("vertices")?
        .as_array()?
        .iter()
        .map(|v| v.as_str().map(str::to_string))
        .collect::<Option<_>>()?;
    let universe = Labeling::new(labels).ok()?;
    let mut facets = Vec::new();
    for facet in value.get("facets")?.as_array()? {
        let members = facet.as_array()?;
        let mut set = VertexSet::EMPTY;
        for token in members {
            set = set.insert(universe.index_of(token.as_str()?).ok()?);
        }
        facets.push(set);
    }
    if facets.is_empty() {
        return Some(SimplicialComplex::void(universe));
    }
    SimplicialComplex::new(universe, facets).ok()
}

/// JSON encoding of upward degree sequences, `{"d":[…],"dprime":[…]}`.
pub fn sequences_to_json(seqs: &UpwardSequences) -> Value {
    json!({ "d": seqs.d(), "dprime": seqs.dprime() })
}

/// Rebuild sequences from [`sequences_to_json`] output.
pub fn sequences_from_json(value: &Value) -> Option<UpwardSequences> {
    let take = |key: &str| -> Option<Vec<usize>> {
        value
            .get(key)?
            .as_array()?
            .iter()
            .map(|v| v.as_u64().map(|x| x as usize))
            .collect()
    };
    UpwardSequences::new(take("d")?, take("dprime")?).ok()
}

/// The generic matrix as JSON: one object per row mapping column label to
/// the signed symbol.
pub fn matrix_to_json(matrix: &GenericMatrix) -> Value {
    let rows: Vec<Value> = matrix
        .rows()
        .iter()
        .map(|(_, entries)| {
            let mut object = Map::new();
            for (column, entry) in entries {
                object.insert(
                    matrix.columns().label(*column).to_string(),
                    Value::String(entry.render()),
                );
            }
            Value::Object(object)
        })
        .collect();
    Value::Array(rows)
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT drawing of a graph; `positions` (parallel to the edge list)
/// annotates each edge with its 1-based place in an order.
pub fn graph_dot(graph: &Graph, positions: Option<&[usize]>) -> String {
    let mut out = String::from("graph {\n");
    for label in graph.universe().labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for (idx, edge) in graph.edges().iter().enumerate() {
        let mut it = edge.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        let mut line = format!(
            "  {} -- {}",
            quote(graph.universe().label(a)),
            quote(graph.universe().label(b))
        );
        if let Some(positions) = positions {
            line.push_str(&format!(" [label=\"{}\"]", positions[idx]));
        }
        line.push_str(";\n");
        out.push_str(&line);
    }
    out.push_str("}\n");
    out
}

/// DOT drawing of a facet order: the codimension-one graph with each
/// facet annotated by its position.
pub fn facet_order_dot(order: &FacetOrder) -> Result<String> {
    let gamma = codim_one_graph(order.complex())?;
    let mut position = vec![0usize; order.order().len()];
    for (place, &facet) in order.order().iter().enumerate() {
        position[facet] = place + 1;
    }
    let mut out = String::from("graph {\n");
    for (facet, label) in gamma.universe().labels().iter().enumerate() {
        out.push_str(&format!(
            "  {} [label=\"{} #{}\"];\n",
            quote(label),
            label,
            position[facet]
        ));
    }
    for edge in gamma.edges() {
        let mut it = edge.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        out.push_str(&format!(
            "  {} -- {};\n",
            quote(gamma.universe().label(a)),
            quote(gamma.universe().label(b))
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use shellability::bipartite::UpwardSequences;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    #[test]
    fn graph_json_round_trips() {
        let g = Graph::new(
            Labeling::new(["a", "b", "c"]).unwrap(),
            vec![vs(&[0, 1]), vs(&[1, 2])],
        )
        .unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back.universe().labels(), g.universe().labels());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn complex_json_round_trips() {
        let c = SimplicialComplex::new(
            Labeling::numeric(4).unwrap(),
            vec![vs(&[0, 1, 2]), vs(&[1, 2, 3])],
        )
        .unwrap();
        let back = complex_from_json(&complex_to_json(&c)).unwrap();
        assert_eq!(back.facets(), c.facets());
    }

    #[test]
    fn sequences_json_round_trips() {
        let s = UpwardSequences::new(vec![4, 3, 2], vec![2, 1, 0, 0]).unwrap();
        let back = sequences_from_json(&sequences_to_json(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn dot_output_is_well_formed() {
        let g = Graph::new(
            Labeling::new(["a", "b"]).unwrap(),
            vec![vs(&[0, 1])],
        )
        .unwrap();
        let dot = graph_dot(&g, Some(&[1]));
        assert!(dot.starts_with("graph {"));
        assert!(dot.contains("\"a\" -- \"b\" [label=\"1\"];"));
    }
}
