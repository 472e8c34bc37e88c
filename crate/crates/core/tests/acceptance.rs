//! Acceptance suite: one test per claim, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use dpcolor::verify::CHECKS;
use dpcolor::Budget;

fn run(name: &str) {
    run_within(name, Duration::from_secs(600))
}

fn run_within(name: &str, limit: Duration) {
    let (_, check) = CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown claim {name}"));
    let start = Instant::now();
    let outcome = check(Budget::default());
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => println!("PASS {name}: {detail} ({elapsed:.2?})"),
        Err(detail) => panic!("FAIL {name}: {detail}"),
    }
    assert!(
        elapsed <= limit,
        "FAIL {name}: took {elapsed:.2?}, limit {limit:.2?}"
    );
}

#[test]
fn hypertree_closed_form() {
    run_within("hypertree-closed-form", Duration::from_secs(60));
}

#[test]
fn unicyclic_closed_form() {
    run_within("unicyclic-closed-form", Duration::from_secs(60));
}

#[test]
fn acyclic_cover_collapse() {
    run("acyclic-cover-collapse");
}

#[test]
fn boundary_profile_splits() {
    run("boundary-profile-splits");
}

#[test]
fn odd_cycle_dp_equals_count() {
    run_within("odd-cycle-dp-equals-count", Duration::from_secs(60));
}

#[test]
fn even_cycle_dp_strict() {
    run_within("even-cycle-dp-strict", Duration::from_secs(120));
}

#[test]
fn bound_tight_iff_hypertree() {
    run("bound-tight-iff-hypertree");
}

#[test]
fn expected_count_matches_bound() {
    run("expected-count-matches-bound");
}

#[test]
fn deletion_ratio_strictness() {
    run("deletion-ratio-strictness");
}

#[test]
fn graph_cycle_sanity() {
    run("graph-cycle-sanity");
}

#[test]
fn randomized_property_suites() {
    run("randomized-property-suites");
}

#[test]
fn every_claim_is_covered() {
    // keep this file in sync with the claim table
    assert_eq!(CHECKS.len(), 11);
}
