//! Plain-text input parsing: one facet/edge per line, whitespace-separated
//! labels, `#` comments.  Labels map to indices in first-appearance order,
//! and all diagnostics carry line numbers.

use std::fmt;

use shellability::base::VertexSet;
use shellability::{Clutter, Graph, Labeling, SimplicialComplex, Tree};

/// A parse failure with its 1-based source line.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Tokenized non-empty lines: `(line_number, tokens)` with comments and
/// blank lines removed.
pub fn tokenize(text: &str) -> Vec<(usize, Vec<String>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect()
}

/// Build the universe (first-appearance order) and one vertex set per
/// line.  Rejects a repeated label within a single line.
fn parse_sets(text: &str) -> Result<(Labeling, Vec<(usize, VertexSet)>), ParseError> {
    let lines = tokenize(text);
    let mut labels: Vec<String> = Vec::new();
    let mut sets = Vec::with_capacity(lines.len());
    for (line, tokens) in &lines {
        let mut set = VertexSet::EMPTY;
        for token in tokens {
            let index = match labels.iter().position(|l| l == token) {
                Some(i) => i,
                None => {
                    labels.push(token.clone());
                    labels.len() - 1
                }
            };
            if index >= shellability::base::MAX_UNIVERSE {
                return err(*line, format!("more than {} distinct labels", shellability::base::MAX_UNIVERSE));
            }
            if set.contains(index) {
                return err(*line, format!("label '{token}' repeats within the line"));
            }
            set = set.insert(index);
        }
        sets.push((*line, set));
    }
    let universe = match Labeling::new(labels) {
        Ok(u) => u,
        Err(e) => return err(0, e.to_string()),
    };
    Ok((universe, sets))
}

/// Strict antichain check used by the facet/clutter readers: any pair of
/// comparable lines is an error at the later line.
fn check_antichain(sets: &[(usize, VertexSet)]) -> Result<(), ParseError> {
    for (j, &(line, set)) in sets.iter().enumerate() {
        for &(earlier_line, earlier) in &sets[..j] {
            if set == earlier {
                return err(line, format!("duplicates line {earlier_line}"));
            }
            if set.is_subset_of(earlier) || earlier.is_subset_of(set) {
                return err(
                    line,
                    format!("comparable with line {earlier_line}; facets must form an antichain"),
                );
            }
        }
    }
    Ok(())
}

/// Parse a facet list into a simplicial complex (strict: comparable lines
/// are rejected rather than absorbed).
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, ParseError> {
    let (universe, sets) = parse_sets(text)?;
    check_antichain(&sets)?;
    if sets.is_empty() {
        return Ok(SimplicialComplex::void(universe));
    }
    SimplicialComplex::new(universe, sets.into_iter().map(|(_, s)| s))
        .map_err(|e| ParseError {
            line: 0,
            message: e.to_string(),
        })
}

/// Parse a facet list as a clutter (same strict antichain rule).
pub fn parse_clutter(text: &str) -> Result<Clutter, ParseError> {
    let (universe, sets) = parse_sets(text)?;
    check_antichain(&sets)?;
    Clutter::new(universe, sets.into_iter().map(|(_, s)| s)).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

/// Parse an edge list into a graph: every line exactly two distinct
/// labels, no repeated edges.
pub fn parse_edges(text: &str) -> Result<Graph, ParseError> {
    let (universe, sets) = parse_sets(text)?;
    let mut edges = Vec::with_capacity(sets.len());
    for (j, &(line, set)) in sets.iter().enumerate() {
        if set.len() != 2 {
            return err(line, format!("an edge needs exactly 2 labels, got {}", set.len()));
        }
        if let Some(&(earlier_line, _)) = sets[..j].iter().find(|&&(_, s)| s == set) {
            return err(line, format!("repeats the edge of line {earlier_line}"));
        }
        edges.push(set);
    }
    Graph::new(universe, edges).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

/// Parse an edge list that must form a tree.
pub fn parse_tree(text: &str) -> Result<Tree, ParseError> {
    let graph = parse_edges(text)?;
    Tree::new(graph).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_build_a_path() {
        let g = parse_edges("1 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.universe().labels(), &["1", "2", "3"]);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let complex = parse_facets("1 2 3\n# note\n\n2 3 4 # trailing\n").unwrap();
        assert_eq!(complex.facet_count(), 2);
        assert_eq!(complex.universe().labels(), &["1", "2", "3", "4"]);
    }

    #[test]
    fn dominated_facet_is_an_error_with_its_line() {
        let e = parse_facets("1 2\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("antichain"));
    }

    #[test]
    fn labels_index_in_first_appearance_order() {
        let g = parse_edges("b a\na c\n").unwrap();
        assert_eq!(g.universe().labels(), &["b", "a", "c"]);
    }

    #[test]
    fn edge_arity_and_duplicates_are_line_errors() {
        assert_eq!(parse_edges("1 2 3\n").unwrap_err().line, 1);
        assert_eq!(parse_edges("1 2\n2 1\n").unwrap_err().line, 2);
        assert_eq!(parse_edges("1 1\n").unwrap_err().line, 1);
    }

    #[test]
    fn tree_validation_propagates() {
        assert!(parse_tree("1 2\n2 3\n").is_ok());
        assert!(parse_tree("1 2\n2 3\n1 3\n").is_err());
    }

    #[test]
    fn empty_input_yields_the_void_complex() {
        let complex = parse_facets("# only a comment\n").unwrap();
        assert_eq!(complex.facet_count(), 0);
    }
}
