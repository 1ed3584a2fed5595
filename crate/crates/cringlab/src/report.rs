//! Check reports: named pass/fail results with basis-vector witnesses.
//!
//! Reports are deterministic for a given input: checks run in registry
//! order and timings are kept out of the canonical serialization.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Infeasible,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Pass, witness: None, detail: None, millis: 0 }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()), detail: None, millis: 0 }
    }

    pub fn infeasible(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Infeasible,
            witness: None,
            detail: Some(detail.into()),
            millis: 0,
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Skipped, witness: None, detail: Some(detail.into()), millis: 0 }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }

    pub fn ok(&self) -> bool {
        matches!(self.status, Status::Pass)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records an equality-of-maps check, witnessing the first basis vector
    /// where the two sides differ.
    pub fn check_eq(&mut self, name: impl Into<String>, lhs: &crate::map::LinMap, rhs: &crate::map::LinMap) {
        let name = name.into();
        match lhs.first_difference(rhs) {
            None => self.push(Check::pass(name)),
            Some(w) => self.push(Check::fail(name, w)),
        }
    }

    pub fn check_that(&mut self, name: impl Into<String>, holds: bool, witness: impl Into<String>) {
        if holds {
            self.push(Check::pass(name));
        } else {
            self.push(Check::fail(name, witness));
        }
    }

    /// Folds a corestriction-style result into the report; on success hands
    /// the value to the caller.
    pub fn take<T>(&mut self, name: impl Into<String>, r: Result<T, String>) -> Option<T> {
        match r {
            Ok(v) => {
                self.push(Check::pass(name));
                Some(v)
            }
            Err(w) => {
                self.push(Check::fail(name, w));
                None
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.title;
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    /// Pass/fail counting `infeasible` as acceptable (used by solver-style
    /// commands where infeasibility is an answer, not an error).
    pub fn no_failures(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {}\n", self.title));
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Infeasible => "INFEASIBLE",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{status:<10} {}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  [witness {w}]"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  ({d})"));
            }
            if timings {
                out.push_str(&format!("  {}ms", c.millis));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text(false))
    }
}
