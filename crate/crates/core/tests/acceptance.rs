//! Acceptance suite as an integration test: one line per criterion.
//!
//! Runs the full configuration by default; set THETACOLOR_QUICK=1 to run
//! the reduced ranges while iterating.

use thetacolor::suite::{run_suite, SuiteConfig};

#[test]
fn acceptance_criteria() {
    let quick = std::env::var("THETACOLOR_QUICK").is_ok();
    let config = SuiteConfig {
        seed: 42,
        quick,
        lemma_lmax: 12,
    };
    let report = run_suite(&config);
    for c in &report.criteria {
        println!(
            "criterion {:>2} [{}] {} — {}",
            c.id,
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.details
        );
    }
    let failed: Vec<_> = report.criteria.iter().filter(|c| !c.passed).collect();
    assert!(
        failed.is_empty(),
        "{} criteria failed: {:?}",
        failed.len(),
        failed.iter().map(|c| c.id).collect::<Vec<_>>()
    );
}

#[test]
fn report_is_deterministic_for_fixed_seed() {
    let config = SuiteConfig {
        seed: 7,
        quick: true,
        lemma_lmax: 6,
    };
    let a = serde_json::to_string(&run_suite(&config)).unwrap();
    let b = serde_json::to_string(&run_suite(&config)).unwrap();
    assert_eq!(a, b);
}
