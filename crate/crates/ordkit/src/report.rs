//! Structured check reports.
//!
//! Checkers return a [`Report`] per claim rather than a bare boolean:
//! the law being checked, the instance it ran on, the verdict, and a
//! witness when one exists. Reports serialize to JSON lines so sweeps
//! can be diffed across runs.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    /// Stable identifier of the law, e.g. `quotient-coinserter`.
    pub claim: String,
    /// The instance the claim was evaluated on.
    pub instance: String,
    pub verdict: Verdict,
    /// Minimal witness for failures (or a certifying artifact for passes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl Report {
    pub fn pass(claim: impl Into<String>, instance: impl Into<String>) -> Report {
        Report {
            claim: claim.into(),
            instance: instance.into(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(
        claim: impl Into<String>,
        instance: impl Into<String>,
        witness: serde_json::Value,
    ) -> Report {
        Report {
            claim: claim.into(),
            instance: instance.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One JSON object per line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
