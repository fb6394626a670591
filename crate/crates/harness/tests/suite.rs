use std::io::Write;

use eigmatch_harness::{run_suite, CheckId, ReportFormat, Severity, SuiteConfig};

fn small(workers: usize) -> SuiteConfig {
    SuiteConfig { connected_max_n: 6, thm32_max_n: 7, trees_max_n: 9, lemma22_trials: 30, seed: 7, workers, checks: None, graph6_file: None }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let one = run_suite(&small(1)).unwrap();
    let two = run_suite(&small(2)).unwrap();
    let four = run_suite(&small(4)).unwrap();
    assert_eq!(one.to_json_without_timing().unwrap(), two.to_json_without_timing().unwrap());
    assert_eq!(one.to_json_without_timing().unwrap(), four.to_json_without_timing().unwrap());
    assert_eq!(one.to_csv().unwrap(), four.to_csv().unwrap());
    assert!(one.is_clean(), "{}", one.to_text());
}

#[test]
fn composite_trials_count_only_qualifying_draws() {
    let a = run_suite(&SuiteConfig { checks: Some(vec![CheckId::Lemma22]), ..small(1) }).unwrap();
    let b = run_suite(&SuiteConfig { checks: Some(vec![CheckId::Lemma22]), seed: 8, ..small(1) }).unwrap();
    assert_eq!(a.counters(CheckId::Lemma22).unwrap().scanned, 30);
    assert_eq!(b.counters(CheckId::Lemma22).unwrap().scanned, 30);
    assert_ne!(a.counters(CheckId::Lemma22).unwrap().eigenvalues, 0);
}

#[test]
fn tree_only_selection_skips_connected_enumeration() {
    let config = SuiteConfig { checks: Some(vec![CheckId::Thm12, CheckId::M0Identity]), trees_max_n: 10, ..small(1) };
    let report = run_suite(&config).unwrap();
    assert_eq!(report.checks.len(), 2);
    // 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 trees.
    assert_eq!(report.counters(CheckId::M0Identity).unwrap().scanned, 201);
    assert_eq!(report.counters(CheckId::M0Identity).unwrap().passes, 201);
    assert!(report.counters(CheckId::Thm31).is_none());
    assert!(report.is_clean());
}

#[test]
fn discrepancy_note_is_not_a_violation() {
    let report = run_suite(&SuiteConfig { checks: Some(vec![CheckId::SpectraFormulas]), ..small(1) }).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.notes, 1);
    let note = report.findings_for(CheckId::SpectraFormulas).find(|f| f.severity == Severity::PaperDiscrepancyNote).unwrap();
    assert_eq!(note.graph6, "Bw");
    assert!(note.observed.contains("m_-1(C3) = 2"));
}

#[test]
fn graph6_file_replaces_enumeration() {
    let dir = std::env::temp_dir().join(format!("eigmatch-suite-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    // C3(2,2,2), C5, P5 and the path on 7 vertices.
    writeln!(f, ">>graph6<<H{{`A@?_\n\nDhc\nDhC\nFhCGG").unwrap();
    drop(f);
    let config = SuiteConfig { graph6_file: Some(path.clone()), checks: Some(vec![CheckId::Thm31, CheckId::M0Identity]), ..small(1) };
    let report = run_suite(&config).unwrap();
    assert_eq!(report.counters(CheckId::Thm31).unwrap().scanned, 4);
    assert_eq!(report.counters(CheckId::M0Identity).unwrap().scanned, 2);
    assert!(report.is_clean(), "{}", report.to_text());
    assert_eq!(report.bounds.graph6_file.as_deref(), Some(path.display().to_string().as_str()));

    std::fs::write(&path, "Dhc\nnot graph6 at all\n").unwrap();
    let err = run_suite(&config).unwrap_err();
    assert!(err.to_string().contains("graphs.g6:2:"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_configurations_are_rejected() {
    assert!(run_suite(&SuiteConfig { connected_max_n: 11, ..small(1) }).is_err());
    assert!(run_suite(&SuiteConfig { trees_max_n: 15, ..small(1) }).is_err());
    assert!(run_suite(&SuiteConfig { checks: Some(Vec::new()), ..small(1) }).is_err());
    assert!("thm99".parse::<CheckId>().is_err());
    assert_eq!("lemma31".parse::<CheckId>().unwrap(), CheckId::Lemma31);
}

#[test]
fn report_formats() {
    let report = run_suite(&SuiteConfig { checks: Some(vec![CheckId::Fig2, CheckId::Paths]), ..small(1) }).unwrap();
    let json: serde_json::Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    assert_eq!(json["violations"], 0);
    assert_eq!(json["checks"][0]["check"], "fig2");
    assert_eq!(json["checks"][1]["scanned"], 19);
    assert_eq!(json["findings"][0]["severity"], "pass");
    assert_eq!(json["findings"][0]["eigenvalue"]["lo"], "-2");
    let csv = report.render(ReportFormat::Csv).unwrap();
    assert!(csv.starts_with("check,graph6,eigenvalue,expected,observed,severity\n"));
    assert_eq!(csv.lines().count(), 2);
    let text = report.render(ReportFormat::Text).unwrap();
    assert!(text.contains("violations: 0, notes: 0"));
}
