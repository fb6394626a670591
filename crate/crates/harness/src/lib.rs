//! Graph enumeration and the exhaustive verification suite.

pub mod checks;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod facts;
pub mod report;
pub mod suite;

pub use checks::CheckId;
pub use error::HarnessError;
pub use report::{ReportFormat, Severity, SuiteReport, VerificationFinding};
pub use suite::{run_suite, SuiteConfig};
