//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub schema: u32,
    pub check_id: String,
    /// Name of the identity or construction being checked.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub wall_ms: u64,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null", default)]
    pub details: serde_json::Value,
}

/// What a check body returns: a status, a witness (required for failures),
/// and optional structured details.
pub struct Outcome {
    pub status: Status,
    pub witness: Option<String>,
    pub details: serde_json::Value,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, witness: None, details: serde_json::Value::Null }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, witness: Some(witness.into()), details: serde_json::Value::Null }
    }

    pub fn undecided(reason: impl Into<String>) -> Self {
        Outcome { status: Status::Undecided, witness: Some(reason.into()), details: serde_json::Value::Null }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = details;
        self
    }
}

impl VerificationReport {
    /// Run `body`, timing it. Errors become failures with the error as witness.
    pub fn run(
        check_id: &str,
        anchor: &str,
        params: &[(&str, String)],
        body: impl FnOnce() -> Result<Outcome>,
    ) -> Self {
        let start = Instant::now();
        let outcome = body().unwrap_or_else(|e| Outcome::fail(format!("error: {e}")));
        VerificationReport {
            schema: SCHEMA_VERSION,
            check_id: check_id.to_string(),
            anchor: anchor.to_string(),
            status: outcome.status,
            witness: outcome.witness,
            wall_ms: start.elapsed().as_millis() as u64,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            details: outcome.details,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_ms = 0;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_line_round_trip() {
        let r = VerificationReport::run("x.y", "anchor", &[("dims", "2,2,2".into())], || {
            Ok(Outcome::fail("entry (0,1) = q"))
        });
        let line = r.to_json_line();
        assert!(line.contains("\"schema\":1"));
        assert!(line.contains("\"status\":\"FAIL\""));
        let back: VerificationReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn errors_become_failures_with_witness() {
        let r = VerificationReport::run("x", "a", &[], || Err(crate::Error::StepBudgetExceeded(5)));
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().contains("budget"));
    }
}
