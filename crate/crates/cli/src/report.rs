//! Verification reports: one named pass/fail line per check, canonical
//! ordering, nonzero exit on any failure.

use std::time::Instant;

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn print_text(&self) {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                println!("{status} {}", c.name);
            } else {
                println!("{status} {} — {}", c.name, c.detail);
            }
        }
        println!(
            "suite {}: {}/{} checks passed in {} ms",
            self.suite,
            self.checks.len() - self.failures(),
            self.checks.len(),
            self.elapsed_ms
        );
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "suite": self.suite,
            "elapsed_ms": self.elapsed_ms,
            "failures": self.failures(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Accumulates checks while timing the suite.
pub struct Recorder {
    suite: String,
    checks: Vec<Check>,
    started: Instant,
}

impl Recorder {
    pub fn new(suite: &str) -> Self {
        Recorder { suite: suite.to_string(), checks: Vec::new(), started: Instant::now() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn finish(self) -> VerifyReport {
        VerifyReport {
            suite: self.suite,
            checks: self.checks,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}
