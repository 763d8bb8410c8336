use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

/// Which version of a formula a check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// Exactly as stated.
    Stated,
    /// The corrected version that agrees with direct computation; each use
    /// documents its correction.
    Derived,
}

/// One counterexample found by a verifier.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a verification suite: how many identities were checked and
/// which of them failed.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    /// The first few counterexamples.
    pub failures: Vec<Failure>,
    /// Documented deviations that are reproduced rather than asserted away.
    pub notes: Vec<String>,
}

const MAX_FAILURES: usize = 20;

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Record one check; `lhs`/`rhs` are only rendered on failure.
    pub fn check<L: fmt::Display, R: fmt::Display>(&mut self, ok: bool, input: impl fmt::Display, lhs: L, rhs: R) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(Failure { input: input.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
            }
        }
    }

    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, input: impl fmt::Display, lhs: &T, rhs: &T) {
        self.check(lhs == rhs, input, lhs, rhs);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(Failure { input: format!("[{}] {}", other.name, f.input), ..f });
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "checked": self.checked,
            "failed": self.failed,
            "failures": self.failures,
            "notes": self.notes,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}: {} checked, {} failed", self.name, self.checked, self.failed)?;
        for x in &self.failures {
            writeln!(f, "  at {}: {} != {}", x.input, x.lhs, x.rhs)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
