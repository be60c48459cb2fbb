//! The identity-verification catalog: each registered check rebuilds a
//! concrete fixture, runs its sub-assertions, and reports a deterministic
//! verdict. Anchors carry the verbatim formula each check verifies; the
//! registry refuses to start if any anchor is missing.

mod checks;

use std::collections::BTreeMap;

use crate::{Error, Result};

/// A formula anchor: a stable reference slug plus the verbatim statement
/// the check verifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub reference: &'static str,
    pub quote: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

/// Free-form check parameters (textual polynomials and options).
pub type Params = BTreeMap<String, String>;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub anchor: Anchor,
    pub details: Vec<String>,
}

type Runner = Box<dyn Fn(&Params) -> Result<Vec<String>> + Send + Sync>;

pub struct IdentityCheck {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub anchor: Anchor,
    runner: Runner,
}

impl IdentityCheck {
    pub fn new(
        name: &'static str,
        tags: &'static [&'static str],
        anchor: Anchor,
        runner: Runner,
    ) -> IdentityCheck {
        IdentityCheck { name, tags, anchor, runner }
    }
}

pub struct Registry {
    checks: Vec<IdentityCheck>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub entries: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail).count()
    }
}

impl Registry {
    /// The standard catalog. Panics (deliberately, before any run) if a
    /// registered check carries an empty anchor.
    pub fn standard() -> Registry {
        let checks = checks::all();
        for c in &checks {
            assert!(
                !c.anchor.quote.trim().is_empty() && !c.anchor.reference.trim().is_empty(),
                "check {} lacks an anchor",
                c.name
            );
        }
        Registry { checks }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name).collect()
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Runs one registered check. Builder failures become a failing
    /// verdict, not an error; only an unknown name is an error.
    pub fn run_check(&self, name: &str, params: &Params) -> Result<CheckReport> {
        let check = self
            .check(name)
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
        let (verdict, details) = match (check.runner)(params) {
            Ok(notes) if notes.is_empty() => (Verdict::Pass, Vec::new()),
            Ok(notes) => (Verdict::Fail, notes),
            Err(e) => (Verdict::Fail, vec![format!("builder failed: {e}")]),
        };
        Ok(CheckReport {
            name: name.to_string(),
            verdict,
            anchor: check.anchor.clone(),
            details,
        })
    }

    /// Runs every check whose tag list contains `tag` (all checks when
    /// `tag` is `None`). Unknown tags yield an empty, successful summary.
    pub fn run_suite(&self, tag: Option<&str>) -> SuiteReport {
        let params = Params::new();
        let selected: Vec<&IdentityCheck> = self
            .checks
            .iter()
            .filter(|c| tag.map_or(true, |t| c.tags.contains(&t)))
            .collect();
        let entries = crate::par::par_map(&selected, |c| {
            self.run_check(c.name, &params).expect("registered name")
        });
        SuiteReport { entries }
    }
}
