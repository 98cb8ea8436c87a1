use garside::verify::{run_suite, Status, VerifyOptions, SUITES};

#[test]
fn every_suite_passes_with_anchored_claims() {
    for suite in SUITES {
        let report = run_suite(suite, &VerifyOptions::default()).unwrap();
        assert!(!report.claims.is_empty(), "{suite}");
        for c in &report.claims {
            assert_eq!(c.status, Status::Pass, "{suite}: {} {}", c.id, c.witness);
            assert!(!c.anchor.is_empty());
            assert!(!c.anchor.contains('§'), "{}", c.anchor);
        }
        assert_eq!(report.exit_code(), 0);
    }
}

#[test]
fn exhausted_budget_is_skipped_not_failed() {
    let report = run_suite("dcat-connectivity", &VerifyOptions { n: Some(3), budget: 1 }).unwrap();
    assert!(report.claims.iter().all(|c| c.status == Status::Skipped));
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite("facts-C", &VerifyOptions::default()).is_err());
}
