//! Acceptance gate: one test per verification criterion.  Each test runs
//! the corresponding suite at full size, prints a single pass/fail line
//! (visible with `--nocapture` and on failure), and enforces the runtime
//! budget for that criterion.

use shellability_cli::suites::{self, SuiteReport, DEFAULT_SEED};

fn check(criterion: usize, budget_ms: u128, report: SuiteReport) {
    let verdict = if report.passed() { "pass" } else { "FAIL" };
    println!(
        "criterion {criterion} ({}): {verdict} — {} checks, {} failures in {} ms",
        report.name, report.checked, report.failure_count, report.ms
    );
    assert!(report.passed(), "{}", report.render_text());
    assert!(
        report.ms < budget_ms,
        "criterion {criterion} took {} ms, budget is {budget_ms} ms",
        report.ms
    );
}

#[test]
fn criterion_1_path_complex_boundary() {
    check(1, 1_000, suites::path_boundary());
}

#[test]
fn criterion_2_five_vertex_equivalence() {
    check(2, 120_000, suites::equivalence5(DEFAULT_SEED, 200));
}

#[test]
fn criterion_3_oracle_agreement() {
    check(3, 120_000, suites::oracle_agreement(DEFAULT_SEED, 100));
}

#[test]
fn criterion_4_clutter_chordality_implies_dual_shellability() {
    check(4, 180_000, suites::clutter_chordal(DEFAULT_SEED, 200));
}

#[test]
fn criterion_5_complement_and_expansion_invariance() {
    check(5, 120_000, suites::expansion(DEFAULT_SEED, 200, 100));
}

#[test]
fn criterion_6_generic_graphs_of_all_small_trees() {
    check(6, 300_000, suites::trees(7));
}

#[test]
fn criterion_7_hereditary_quotient_and_blow_up_preservation() {
    check(7, 120_000, suites::preservation(DEFAULT_SEED, 100, 50, 50));
}

#[test]
fn criterion_8_bipartite_characterizations() {
    check(8, 180_000, suites::bipartite(7));
}

#[test]
fn criterion_9_duality_and_linear_quotients() {
    check(9, 60_000, suites::ideals(DEFAULT_SEED, 200));
}
