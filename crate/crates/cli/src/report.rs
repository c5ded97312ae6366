//! Check records and report serialization.
//!
//! A report is deterministic for fixed flags apart from the wall-time
//! field: check names, order, statuses, and witnesses never depend on
//! scheduling, and randomized spot checks derive from the explicit seed.

use serde::Serialize;
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: String,
    pub ms: u128,
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        }
    }
}

impl Check {
    /// Run a pass/fail check; either way the closure supplies the witness.
    pub fn run(name: impl Into<String>, body: impl FnOnce() -> Result<String, String>) -> Check {
        let start = Instant::now();
        let (status, witness) = match body() {
            Ok(w) => (Status::Pass, w),
            Err(w) => (Status::Fail, w),
        };
        Check {
            name: name.into(),
            status,
            witness,
            ms: start.elapsed().as_millis(),
        }
    }

    /// Run an observational check that reports but never fails.
    pub fn info(name: impl Into<String>, body: impl FnOnce() -> String) -> Check {
        let start = Instant::now();
        let witness = body();
        Check {
            name: name.into(),
            status: Status::Info,
            witness,
            ms: start.elapsed().as_millis(),
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub n: u32,
    pub checks: Vec<Check>,
    pub ok: bool,
}

impl Report {
    pub fn new(suite: &str, n: u32, checks: Vec<Check>) -> Report {
        let ok = checks.iter().all(|c| c.status != Status::Fail);
        Report {
            suite: suite.to_string(),
            n,
            checks,
            ok,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}  n: {}", self.suite, self.n);
        for c in &self.checks {
            let _ = write!(out, "  {:<4}  {}  [{} ms]", c.status.label(), c.name, c.ms);
            if c.witness.is_empty() {
                out.push('\n');
            } else {
                let _ = writeln!(out, "  {}", c.witness);
            }
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let failed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        if self.ok {
            let _ = writeln!(out, "ok: {passed} checks passed");
        } else {
            let _ = writeln!(out, "FAILED: {failed} of {} checks failed", self.checks.len());
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}
