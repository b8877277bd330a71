//! Acceptance suite: one test per criterion, each driving the matching
//! verification campaign. Every tolerance is an exact-integer equality;
//! nothing is floating point. Criteria 2 and 3 share the base-lemmas
//! campaign (the hook-restriction consistency checks live there).
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion PASS/FAIL lines and timings.

use sylow_branching::wreath::DEFAULT_GROUP_BUDGET;
use sylow_cli::suites::run_suite;

fn run(criterion: &str, suite: &str) {
    let report = run_suite(suite, DEFAULT_GROUP_BUDGET).expect("suite must be runnable");
    let ok = report.all_passed();
    println!(
        "{criterion}: {} (suite {}, {}/{} checks, {} ms)",
        if ok { "PASS" } else { "FAIL" },
        report.suite,
        report.checks.len() - report.failures(),
        report.checks.len(),
        report.elapsed_ms
    );
    for c in report.checks.iter().filter(|c| !c.passed) {
        println!("  FAIL {} — {}", c.name, c.detail);
    }
    assert!(ok, "{criterion} failed; run `sylow verify {suite}` for details");
}

#[test]
fn criterion_1_table_reproduction_at_n25() {
    run("criterion 1", "table1");
}

#[test]
fn criteria_2_3_base_lemmas_and_hook_restriction() {
    run("criteria 2+3", "base-lemmas");
}

#[test]
fn criterion_4_composite_cross_check_at_n30() {
    run("criterion 4", "n30");
}

#[test]
fn criterion_5_lr_set_algebra_properties() {
    run("criterion 5", "lr-props");
}

#[test]
fn criterion_6_multiplicity_lower_bounds() {
    run("criterion 6", "multiplicities");
}

#[test]
fn criterion_7_predictor_unit_identities() {
    run("criterion 7", "table2-slices");
}

#[test]
fn criterion_8_intersection_ratio_bounds() {
    run("criterion 8", "ratio");
}

#[test]
fn criterion_9_invariant_suites() {
    run("criterion 9", "invariants");
}
