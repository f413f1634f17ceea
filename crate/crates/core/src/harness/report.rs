use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome class of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// The claim's hypotheses are out of reach at the tested sizes; any
    /// violating instance is a finding, not a refutation.
    Exploratory,
}

/// Result of running one claim at one parameter set. Serializes to a single
/// JSON object per line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub params: BTreeMap<String, Value>,
    /// Instances meeting the claim's hypotheses that were checked.
    pub instances_tested: u64,
    /// Sampled instances outside the hypotheses, or abandoned on budget.
    pub instances_skipped: u64,
    pub counterexamples: Vec<Value>,
    pub status: Status,
    /// Exact sub-checks and summary numbers specific to the claim.
    pub findings: BTreeMap<String, Value>,
    pub seed: u64,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn new(claim_id: &str, seed: u64) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            params: BTreeMap::new(),
            instances_tested: 0,
            instances_skipped: 0,
            counterexamples: Vec::new(),
            status: Status::Pass,
            findings: BTreeMap::new(),
            seed,
            wall_time: 0.0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params
            .insert(key.to_string(), serde_json::to_value(value).expect("param serializes"));
        self
    }

    pub fn finding(&mut self, key: &str, value: impl Serialize) {
        self.findings.insert(
            key.to_string(),
            serde_json::to_value(value).expect("finding serializes"),
        );
    }

    /// PASS/FAIL from the counterexample list, or EXPLORATORY.
    pub fn settle(&mut self, asserted: bool) {
        self.status = match (asserted, self.counterexamples.is_empty()) {
            (false, _) => Status::Exploratory,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// JSON line with `wall_time` zeroed, for byte-level comparisons.
    pub fn to_json_line_untimed(&self) -> String {
        let mut r = self.clone();
        r.wall_time = 0.0;
        r.to_json_line()
    }
}
