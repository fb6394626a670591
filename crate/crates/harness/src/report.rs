//! Findings, per-check counters and the serialized suite report.

use std::fmt;
use std::path::Path;

use eigmatch_core::AlgebraicNumber;
use serde::Serialize;

use crate::checks::CheckId;
use crate::error::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    Pass,
    Violation,
    PaperDiscrepancyNote,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Pass => "pass",
            Severity::Violation => "violation",
            Severity::PaperDiscrepancyNote => "paper-discrepancy-note",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationFinding {
    pub check: CheckId,
    pub graph6: String,
    pub eigenvalue: Option<AlgebraicNumber>,
    pub expected: String,
    pub observed: String,
    pub severity: Severity,
}

/// Result of one check on one instance.
#[derive(Clone, Debug, Default)]
pub struct InstanceResult {
    pub eigenvalues: usize,
    pub skipped: bool,
    /// The first failed assertion, if any.
    pub violation: Option<VerificationFinding>,
    /// Passes and notes worth recording individually.
    pub notes: Vec<VerificationFinding>,
}

impl InstanceResult {
    pub fn skipped() -> Self {
        InstanceResult { skipped: true, ..Default::default() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounters {
    pub scanned: usize,
    pub eigenvalues: usize,
    pub passes: usize,
    pub violations: usize,
    pub skipped: usize,
}

impl CheckCounters {
    pub fn record(&mut self, r: &InstanceResult) {
        self.scanned += 1;
        self.eigenvalues += r.eigenvalues;
        if r.skipped {
            self.skipped += 1;
        } else if r.violation.is_some() {
            self.violations += 1;
        } else {
            self.passes += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub check: CheckId,
    #[serde(flatten)]
    pub counters: CheckCounters,
}

/// Enumeration bounds and seed that determine a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub connected_max_n: usize,
    pub thm32_max_n: usize,
    pub trees_max_n: usize,
    pub lemma22_trials: usize,
    pub seed: u64,
    pub graph6_file: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: String,
    pub bounds: Bounds,
    pub checks: Vec<CheckSummary>,
    pub findings: Vec<VerificationFinding>,
    pub violations: usize,
    pub notes: usize,
    pub wall_clock_seconds: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl SuiteReport {
    pub fn counters(&self, check: CheckId) -> Option<&CheckCounters> {
        self.checks.iter().find(|c| c.check == check).map(|c| &c.counters)
    }

    pub fn findings_for(&self, check: CheckId) -> impl Iterator<Item = &VerificationFinding> {
        self.findings.iter().filter(move |f| f.check == check)
    }

    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> Result<String, HarnessError> {
        serde_json::to_string_pretty(self).map_err(|e| HarnessError::Serialize(e.to_string()))
    }

    /// JSON with the wall-clock zeroed, for comparing runs.
    pub fn to_json_without_timing(&self) -> Result<String, HarnessError> {
        let mut copy = self.clone();
        copy.wall_clock_seconds = 0.0;
        copy.to_json()
    }

    /// One row per finding.
    pub fn to_csv(&self) -> Result<String, HarnessError> {
        let err = |e: csv::Error| HarnessError::Serialize(e.to_string());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "graph6", "eigenvalue", "expected", "observed", "severity"]).map_err(err)?;
        for f in &self.findings {
            let lambda = f.eigenvalue.as_ref().map(AlgebraicNumber::to_exact_string).unwrap_or_default();
            w.write_record([f.check.name(), &f.graph6, &lambda, &f.expected, &f.observed, &f.severity.to_string()]).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| HarnessError::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| HarnessError::Serialize(e.to_string()))
    }

    /// Aligned per-check counters followed by the findings.
    pub fn to_text(&self) -> String {
        let mut out = format!("eigmatch {} ({:.1}s)\n", self.version, self.wall_clock_seconds);
        out += &format!("{:<20}{:>10}{:>12}{:>10}{:>11}{:>9}\n", "check", "scanned", "eigenvalues", "passes", "violations", "skipped");
        for c in &self.checks {
            let k = &c.counters;
            out += &format!("{:<20}{:>10}{:>12}{:>10}{:>11}{:>9}\n", c.check.name(), k.scanned, k.eigenvalues, k.passes, k.violations, k.skipped);
        }
        for f in &self.findings {
            let lambda = f.eigenvalue.as_ref().map(|l| format!(" λ={}", l.to_exact_string())).unwrap_or_default();
            out += &format!("[{}] {} {}{}: expected {}; observed {}\n", f.severity, f.check.name(), f.graph6, lambda, f.expected, f.observed);
        }
        out += &format!("violations: {}, notes: {}\n", self.violations, self.notes);
        out
    }

    pub fn render(&self, format: ReportFormat) -> Result<String, HarnessError> {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Text => Ok(self.to_text()),
        }
    }

    pub fn write_to(&self, path: &Path, format: ReportFormat) -> Result<(), HarnessError> {
        let body = self.render(format)?;
        std::fs::write(path, body).map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
    }
}
