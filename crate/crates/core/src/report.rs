//! Machine-readable reports: the stable JSON schema shared by the
//! library and the command-line front end.
//!
//! The document shape is `{charts: [...], divisors: {...}, verdicts:
//! [...]}`; serialization is deterministic for fixed input (ordered
//! collections only, no timestamps).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{SuiteReport, Verdict};
use crate::geom::{Atlas, Divisor};

#[derive(Clone, Debug, Serialize)]
pub struct ChartDoc {
    pub label: String,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictDoc {
    pub name: String,
    pub verdict: String,
    pub reference: String,
    pub quote: String,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ReportDoc {
    pub charts: Vec<ChartDoc>,
    pub divisors: BTreeMap<String, Vec<String>>,
    pub verdicts: Vec<VerdictDoc>,
}

impl ReportDoc {
    pub fn with_atlas(mut self, atlas: &Atlas) -> ReportDoc {
        self.charts = atlas
            .charts()
            .iter()
            .map(|c| ChartDoc {
                label: c.label.clone(),
                vars: c.ring.var_names().to_vec(),
                relations: c.relations.serialized(),
            })
            .collect();
        self
    }

    pub fn with_divisor(mut self, name: &str, d: &Divisor) -> ReportDoc {
        self.divisors
            .insert(name.to_string(), d.gens().iter().map(|g| g.to_string()).collect());
        self
    }

    pub fn with_suite(mut self, suite: &SuiteReport) -> ReportDoc {
        self.verdicts = suite
            .entries
            .iter()
            .map(|e| VerdictDoc {
                name: e.name.clone(),
                verdict: match &e.verdict {
                    Verdict::Pass => "pass".to_string(),
                    Verdict::Fail => "fail".to_string(),
                    Verdict::Skipped(r) => format!("skipped: {r}"),
                },
                reference: e.anchor.reference.to_string(),
                quote: e.anchor.quote.to_string(),
                details: e.details.clone(),
            })
            .collect();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
