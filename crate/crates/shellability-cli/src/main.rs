//! The `shellability` command-line tool: predicates, constructions, and
//! batch verification suites over complexes, clutters, graphs, and trees
//! given as small text files.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shellability::clutters::{e_chordal_peo, is_w_chordal, RemovalMode, WChordality};
use shellability::complexes::dual_of_independence;
use shellability::generic_tree::{generic_matrix, gt_report, GenericGraph};
use shellability::graphs::{complement_graph, find_peo, is_ess_graph, PeoOutcome};
use shellability::ideals::{facet_ideal, find_linear_quotients};
use shellability::shelling::{find_shelling, find_strong_shelling, FacetOrder};
use shellability::{Clutter, Graph, SimplicialComplex};

use shellability_cli::input;
use shellability_cli::render;
use shellability_cli::suites;
use shellability_cli::verdict::{digest, Verdict};

#[derive(Parser)]
#[command(
    name = "shellability",
    version,
    about = "Strong shellability, chordality, and duality checks \
             for complexes, clutters, graphs, and trees"
)]
struct Cli {
    /// Input file; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse inputs with more facets/edges than this before searching.
    #[arg(long, global = true)]
    max_facets: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strong shellability of a complex given by its facets.
    Ss,
    /// Decide shellability of a complex given by its facets.
    Shellable,
    /// Decide edgewise strong shellability of a graph given by its edges.
    Ess,
    /// Decide chordality of a graph, or of its complement.
    Chordal {
        /// Check the complement graph instead.
        #[arg(long)]
        complement: bool,
    },
    /// Decide chordality of a clutter in the deletion/contraction sense.
    Wchordal,
    /// Find a simplicial vertex elimination order of a uniform clutter.
    Echordal,
    /// Emit the dual of the independence complex of a clutter.
    Dual {
        /// Edge cardinality to restrict to; defaults to the uniformity.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Search for a linear-quotient order on the facet ideal.
    Linquot,
    /// Build the generic graph of a tree.
    GenericGraph {
        /// Emit the full verification report instead of the graph.
        #[arg(long)]
        report: bool,
    },
    /// Recognize a Ferrers bipartite graph.
    Ferrers,
    /// Decompose a bipartite graph into upward degree sequences.
    Decompose {
        /// Base vertex label; defaults to the first vertex.
        #[arg(long)]
        from: Option<String>,
    },
    /// Run a named verification suite.
    Suite {
        /// One of the names listed by `suite help`.
        name: String,
        /// Seed for the random portions.
        #[arg(long)]
        seed: Option<u64>,
        /// Scale for the random portions (or the vertex bound).
        #[arg(long)]
        count: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if let Command::Suite { name, seed, count } = &cli.command {
        return run_suite(name, seed.unwrap_or(suites::DEFAULT_SEED), *count, cli.format);
    }

    let text = read_input(&cli.input)?;

    match &cli.command {
        Command::Ss => {
            let complex = parse_facets(&text)?;
            guard(complex.facet_count(), cli.max_facets, "facets")?;
            let started = Instant::now();
            let order = find_strong_shelling(&complex).map_err(stringify)?;
            let verdict = order_verdict("strongly-shellable", &text, &order, None, started);
            let dot = order.as_ref().map(render::facet_order_dot).transpose();
            emit_verdict(verdict, dot.map_err(stringify)?, cli.format)
        }
        Command::Shellable => {
            let complex = parse_facets(&text)?;
            guard(complex.facet_count(), cli.max_facets, "facets")?;
            let started = Instant::now();
            let order = find_shelling(&complex).map_err(stringify)?;
            let verdict = order_verdict("shellable", &text, &order, None, started);
            let dot = order.as_ref().map(render::facet_order_dot).transpose();
            emit_verdict(verdict, dot.map_err(stringify)?, cli.format)
        }
        Command::Ess => {
            let graph = parse_edges(&text)?;
            guard(graph.edge_count(), cli.max_facets, "edges")?;
            let started = Instant::now();
            let order = is_ess_graph(&graph).map_err(stringify)?;
            let witness = if order.is_none() {
                Some(complement_obstruction(&graph))
            } else {
                None
            };
            let verdict =
                order_verdict("edgewise-strongly-shellable", &text, &order, witness, started);
            let dot = order.as_ref().map(|o| edge_order_dot(&graph, o)).transpose()?;
            emit_verdict(verdict, dot, cli.format)
        }
        Command::Chordal { complement } => {
            let graph = parse_edges(&text)?;
            let checked = if *complement {
                complement_graph(&graph)
            } else {
                graph
            };
            let predicate = if *complement {
                "complement-chordal"
            } else {
                "chordal"
            };
            let started = Instant::now();
            let (holds, certificate, witness) = match find_peo(&checked) {
                PeoOutcome::Peo(peo) => (true, Some(peo.render()), None),
                PeoOutcome::NotChordal { cycle } => {
                    let rendered = cycle
                        .iter()
                        .map(|&v| checked.universe().label(v).to_string())
                        .collect::<Vec<_>>()
                        .join("-");
                    (false, None, Some(format!("chordless cycle {rendered}")))
                }
            };
            let verdict = Verdict {
                predicate: predicate.to_string(),
                input: digest(&text),
                holds,
                certificate,
                witness,
                ms: started.elapsed().as_millis(),
            };
            emit_verdict(verdict, None, cli.format)
        }
        Command::Wchordal => {
            let clutter = parse_clutter(&text)?;
            let started = Instant::now();
            let (holds, witness) = match is_w_chordal(&clutter).map_err(stringify)? {
                WChordality::Chordal => (true, None),
                WChordality::NotChordal { minor, how } => {
                    let steps = how
                        .sequence()
                        .iter()
                        .map(|(mode, label)| match mode {
                            RemovalMode::Delete => format!("delete {label}"),
                            RemovalMode::Contract => format!("contract {label}"),
                        })
                        .collect::<Vec<_>>()
                        .join(", ");
                    let reached = if steps.is_empty() {
                        String::new()
                    } else {
                        format!(" reached by {steps}")
                    };
                    let message = format!(
                        "minor {} without a simplicial vertex{reached}",
                        minor.render_edges()
                    );
                    (false, Some(message))
                }
            };
            let verdict = Verdict {
                predicate: "w-chordal".to_string(),
                input: digest(&text),
                holds,
                certificate: None,
                witness,
                ms: started.elapsed().as_millis(),
            };
            emit_verdict(verdict, None, cli.format)
        }
        Command::Echordal => {
            let clutter = parse_clutter(&text)?;
            let started = Instant::now();
            let order = e_chordal_peo(&clutter).map_err(stringify)?;
            let certificate = order.as_ref().map(|order| {
                order
                    .iter()
                    .map(|&v| clutter.universe().label(v).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            });
            let verdict = Verdict {
                predicate: "e-chordal".to_string(),
                input: digest(&text),
                holds: certificate.is_some(),
                certificate,
                witness: None,
                ms: started.elapsed().as_millis(),
            };
            emit_verdict(verdict, None, cli.format)
        }
        Command::Dual { d } => {
            let clutter = parse_clutter(&text)?;
            let d = d
                .or_else(|| clutter.uniformity())
                .ok_or("clutter is not uniform; pass --d N")?;
            let dual = dual_of_independence(&clutter, d).map_err(stringify)?;
            emit_object(
                dual.render_facets(),
                render::complex_to_json(&dual),
                None,
                cli.format,
            )
        }
        Command::Linquot => {
            let complex = parse_facets(&text)?;
            guard(complex.facet_count(), cli.max_facets, "facets")?;
            let ideal = facet_ideal(&complex);
            let started = Instant::now();
            let found = find_linear_quotients(&ideal).map_err(stringify)?;
            let certificate = found.map(|order| {
                order
                    .iter()
                    .map(|&i| ideal.render_monomial(ideal.generators()[i]))
                    .collect::<Vec<_>>()
                    .join(" < ")
            });
            let verdict = Verdict {
                predicate: "linear-quotients".to_string(),
                input: digest(&text),
                holds: certificate.is_some(),
                certificate,
                witness: None,
                ms: started.elapsed().as_millis(),
            };
            emit_verdict(verdict, None, cli.format)
        }
        Command::GenericGraph { report } => {
            let tree = parse_tree(&text)?;
            if *report {
                return emit_report(&tree, cli.format);
            }
            let generic = GenericGraph::new(&tree).map_err(stringify)?;
            let graph = generic.graph();
            emit_object(
                graph.render_edges(),
                render::graph_to_json(graph),
                Some(render::graph_dot(graph, None)),
                cli.format,
            )
        }
        Command::Ferrers => {
            let graph = parse_edges(&text)?;
            let started = Instant::now();
            let outcome = shellability::bipartite::is_ferrers(&graph).map_err(stringify)?;
            let (holds, certificate, witness) = match outcome {
                shellability::bipartite::FerrersOutcome::Ferrers(layout) => {
                    let rows = labels(&graph, layout.rows());
                    let cols = labels(&graph, layout.cols());
                    (true, Some(format!("rows {rows}; columns {cols}")), None)
                }
                shellability::bipartite::FerrersOutcome::NotFerrers {
                    vertex,
                    present,
                    missing,
                } => {
                    let message = format!(
                        "{} is adjacent to {} but not to the earlier column {}",
                        graph.universe().label(vertex),
                        graph.universe().label(present),
                        graph.universe().label(missing)
                    );
                    (false, None, Some(message))
                }
            };
            let verdict = Verdict {
                predicate: "ferrers".to_string(),
                input: digest(&text),
                holds,
                certificate,
                witness,
                ms: started.elapsed().as_millis(),
            };
            emit_verdict(verdict, None, cli.format)
        }
        Command::Decompose { from } => {
            let graph = parse_edges(&text)?;
            let base = match from {
                Some(label) => graph.universe().index_of(label).map_err(stringify)?,
                None => 0,
            };
            let started = Instant::now();
            match shellability::bipartite::recover_sequences(&graph, base).map_err(stringify)? {
                shellability::bipartite::Recovery::Decomposed(decomposition) => {
                    let order = shellability::bipartite::lex_strong_shelling(&graph, base)
                        .map_err(stringify)?;
                    let text_out = format!(
                        "{}\norder: {}",
                        decomposition.sequences().render(),
                        order.render()
                    );
                    emit_object(
                        text_out,
                        render::sequences_to_json(decomposition.sequences()),
                        None,
                        cli.format,
                    )
                }
                shellability::bipartite::Recovery::NotDecomposable(reason) => {
                    let verdict = Verdict {
                        predicate: "decomposable".to_string(),
                        input: digest(&text),
                        holds: false,
                        certificate: None,
                        witness: Some(reason.to_string()),
                        ms: started.elapsed().as_millis(),
                    };
                    emit_verdict(verdict, None, cli.format)
                }
            }
        }
        Command::Suite { .. } => unreachable!("handled before reading input"),
    }
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

fn emit_verdict(
    verdict: Verdict,
    dot: Option<String>,
    format: Format,
) -> Result<ExitCode, String> {
    match format {
        Format::Text => println!("{}", verdict.render_text()),
        Format::Json => println!("{}", verdict.to_json()),
        Format::Dot => match dot {
            Some(dot) if verdict.holds => println!("{dot}"),
            Some(_) => println!("{}", verdict.render_text()),
            None => return Err("dot output is not available for this command".to_string()),
        },
    }
    Ok(exit_for(verdict.holds))
}

/// Informational output: an object rather than a true/false verdict.
fn emit_object(
    text: String,
    json: Value,
    dot: Option<String>,
    format: Format,
) -> Result<ExitCode, String> {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
        Format::Dot => match dot {
            Some(dot) => println!("{dot}"),
            None => return Err("dot output is not available for this command".to_string()),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn run_suite(
    name: &str,
    seed: u64,
    count: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let report = suites::run_named(name, seed, count).ok_or_else(|| {
        format!(
            "unknown suite {name:?}; available: {}",
            suites::suite_names().join(", ")
        )
    })?;
    match format {
        Format::Text => println!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Dot => return Err("dot output is not available for suites".to_string()),
    }
    Ok(exit_for(report.passed()))
}

fn emit_report(tree: &shellability::Tree, format: Format) -> Result<ExitCode, String> {
    let report = gt_report(tree).map_err(stringify)?;
    let matrix = generic_matrix(tree).map_err(stringify)?;
    match format {
        Format::Text => {
            for (name, ok) in report.checks() {
                println!("{}: {}", name, if ok { "ok" } else { "FAIL" });
            }
        }
        Format::Json => {
            let checks: Value = report
                .checks()
                .into_iter()
                .map(|(name, ok)| (name.to_string(), Value::Bool(ok)))
                .collect::<serde_json::Map<String, Value>>()
                .into();
            let value = json!({
                "graph": render::graph_to_json(report.generic.graph()),
                "clique_number": report.clique_number,
                "tree_leaves": report.tree_leaf_count,
                "generic_leaves": report.generic_leaf_count,
                "diameter": report.diameter,
                "ess_order": report.ess_order.as_ref().map(FacetOrder::render),
                "independence_facets": report.independence.render_facets(),
                "independence_order": report.independence_order.as_ref().map(FacetOrder::render),
                "matrix": render::matrix_to_json(&matrix),
                "checks": checks,
            });
            println!("{value}");
        }
        Format::Dot => println!("{}", render::graph_dot(report.generic.graph(), None)),
    }
    Ok(exit_for(report.all_hold()))
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn stringify(error: shellability::Error) -> String {
    error.to_string()
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(path) => {
            fs::read_to_string(path).map_err(|error| format!("{}: {error}", path.display()))
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|error| format!("standard input: {error}"))?;
            Ok(text)
        }
    }
}

fn labels(graph: &Graph, vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|&v| graph.universe().label(v).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn guard(count: usize, max: Option<usize>, what: &str) -> Result<(), String> {
    match max {
        Some(cap) if count > cap => Err(format!(
            "input has {count} {what}, above the --max-facets guard of {cap}"
        )),
        _ => Ok(()),
    }
}

fn parse_facets(text: &str) -> Result<SimplicialComplex, String> {
    input::parse_facets(text).map_err(|e| e.to_string())
}

fn parse_clutter(text: &str) -> Result<Clutter, String> {
    input::parse_clutter(text).map_err(|e| e.to_string())
}

fn parse_edges(text: &str) -> Result<Graph, String> {
    input::parse_edges(text).map_err(|e| e.to_string())
}

fn parse_tree(text: &str) -> Result<shellability::Tree, String> {
    input::parse_tree(text).map_err(|e| e.to_string())
}

fn order_verdict(
    predicate: &str,
    text: &str,
    order: &Option<FacetOrder>,
    witness: Option<String>,
    started: Instant,
) -> Verdict {
    Verdict {
        predicate: predicate.to_string(),
        input: digest(text),
        holds: order.is_some(),
        certificate: order.as_ref().map(FacetOrder::render),
        witness,
        ms: started.elapsed().as_millis(),
    }
}

/// Render the chordless cycle of the complement that obstructs edgewise
/// strong shellability.
fn complement_obstruction(graph: &Graph) -> String {
    match find_peo(&complement_graph(graph)) {
        PeoOutcome::Peo(_) => "no obstruction in the complement".to_string(),
        PeoOutcome::NotChordal { cycle } => {
            let rendered = cycle
                .iter()
                .map(|&v| graph.universe().label(v).to_string())
                .collect::<Vec<_>>()
                .join("-");
            format!("complement has chordless cycle {rendered}")
        }
    }
}

/// DOT rendering of a graph whose edges are annotated with their 1-based
/// position in a strong shelling order of the edge complex.
fn edge_order_dot(graph: &Graph, order: &FacetOrder) -> Result<String, String> {
    let mut positions = vec![0usize; graph.edge_count()];
    for (position, facet) in order.facets_in_order().into_iter().enumerate() {
        let index = graph
            .edges()
            .iter()
            .position(|&edge| edge == facet)
            .ok_or("order facet is not an edge of the graph")?;
        positions[index] = position + 1;
    }
    Ok(render::graph_dot(graph, Some(&positions)))
}
