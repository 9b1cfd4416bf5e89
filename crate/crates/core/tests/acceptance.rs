//! Acceptance gate: runs the full verification suite and prints one
//! pass/fail line per criterion.
//!
//! Run with: cargo test --release --test acceptance -- --nocapture

use levelone::config::RunConfig;
use levelone::suite::{run_suite, SuiteOptions};

#[test]
fn acceptance_criteria() {
    let results = run_suite(&SuiteOptions::default(), &RunConfig::default());
    assert_eq!(results.len(), 9, "all nine criteria must run");
    let mut ok = true;
    for r in &results {
        println!("{}", r.line());
        ok &= r.passed;
    }
    assert!(ok, "at least one acceptance criterion failed (see lines above)");
}
