//! Runs the whole identity registry at a moderate range and checks the
//! reporting contract.

use fence_tilings::identities::{identity_ids, verify_all, verify_identity, DEFAULT_MAX_N};
use fence_tilings::Error;

#[test]
fn test_every_identity_passes_at_range_30() {
    let reports = verify_all(Some(30));
    assert_eq!(reports.len(), identity_ids().len());
    for report in &reports {
        let failures = report.failures();
        assert!(
            failures.is_empty(),
            "{} has {} failures, first at {}",
            report.id(),
            failures.len(),
            failures[0].params()
        );
        assert!(!report.points().is_empty(), "{} checked nothing", report.id());
        assert!(report.passed());
    }
}

#[test]
fn test_reports_come_back_sorted_and_complete() {
    let reports = verify_all(Some(2));
    let ids: Vec<&str> = reports.iter().map(|r| r.id()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(ids, identity_ids());
    assert!(ids.contains(&"I:JJ"));
    assert!(ids.contains(&"T:bijJ"));
    assert!(ids.contains(&"I:2nkbin"));
}

#[test]
fn test_single_identity_report_contract() {
    let report = verify_identity("I:Sf2", None).unwrap();
    assert_eq!(report.id(), "I:Sf2");
    assert_eq!(report.range(), format!("n=0..={DEFAULT_MAX_N}"));
    assert_eq!(report.points().len(), DEFAULT_MAX_N as usize + 1);
    assert!(report.passed());
    assert!(report.statement().contains("f_n*f_{n+1}"));

    let lines = report.kv_lines();
    assert_eq!(lines.len(), report.points().len());
    for line in &lines {
        assert!(line.starts_with("id=I:Sf2 params=n="), "bad line: {line}");
        assert!(line.contains(" lhs=") && line.contains(" rhs="), "bad line: {line}");
        assert!(line.ends_with(" ok=true"), "bad line: {line}");
    }
}

#[test]
fn test_unknown_identity_is_an_error() {
    match verify_identity("I:doesNotExist", None) {
        Err(Error::UnknownIdentity(id)) => assert_eq!(id, "I:doesNotExist"),
        other => panic!("expected UnknownIdentity, got {other:?}"),
    }
}

#[test]
fn test_degenerate_range_still_checks_points() {
    for report in verify_all(Some(1)) {
        assert!(
            !report.points().is_empty(),
            "{} produced an empty range",
            report.id()
        );
        assert!(report.passed(), "{} failed at degenerate range", report.id());
    }
}
