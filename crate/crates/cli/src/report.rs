use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// One named check. `anchor` names the statement being verified.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Check {
    pub fn exact(name: impl Into<String>, anchor: &str, passed: bool) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            passed,
            residual: None,
            tolerance: None,
            reference: None,
            detail: Value::Null,
        }
    }

    /// Passes when `residual ≤ tolerance`; NaN never passes.
    pub fn residual(name: impl Into<String>, anchor: &str, residual: f64, tolerance: f64) -> Self {
        Check { residual: Some(residual), tolerance: Some(tolerance), ..Self::exact(name, anchor, residual <= tolerance) }
    }

    /// A check that could not run because the computation failed.
    pub fn error(name: impl Into<String>, anchor: &str, err: impl std::fmt::Display) -> Self {
        Check { detail: Value::String(err.to_string()), ..Self::exact(name, anchor, false) }
    }

    pub fn with_reference(mut self, r: impl Into<String>) -> Self {
        self.reference = Some(r.into());
        self
    }

    pub fn with_detail(mut self, d: Value) -> Self {
        self.detail = d;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub parameters: Value,
    pub checks: Vec<Check>,
    pub wall_clock_seconds: f64,
    pub version: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = Value::Bool(self.passed());
        v
    }

    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            let res = c.residual.map(|r| format!("  residual {r:.3e}")).unwrap_or_default();
            let pad = width - c.name.chars().count();
            let _ = writeln!(out, "{status}  {}{}  [{}]{res}", c.name, " ".repeat(pad), c.anchor);
        }
        let _ = writeln!(
            out,
            "{} of {} checks passed in {:.2} s",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.wall_clock_seconds
        );
        out
    }
}

/// Collects checks and stamps the elapsed time.
pub struct ReportBuilder {
    command: String,
    parameters: Value,
    checks: Vec<Check>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(command: impl Into<String>, parameters: Value) -> Self {
        ReportBuilder { command: command.into(), parameters, checks: Vec::new(), start: Instant::now() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            command: self.command,
            parameters: self.parameters,
            checks: self.checks,
            wall_clock_seconds: self.start.elapsed().as_secs_f64(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}
