//! End-to-end verification pipeline producing a deterministic report.

mod checks;

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;
use serde_json::Value;

use crate::curvelattice::{kummer_config, CurveConfig};
use crate::exactfield::is_prime;

pub const REPORT_VERSION: &str = "1.0.0";

/// JSON schema for serialized reports.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

pub const AXIOMS: &[&str] = &[
    "Assumed without verification: the image of the canonical representation of the automorphism group of a K3 surface that is not supersingular, in odd characteristic, is finite.",
    "Only the formal kernel identities resting on this are checked; finiteness of the index is never claimed as verified.",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("odd prime required, got {0}")]
    InvalidPrime(u64),
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("conjugation range must be at least 1")]
    InvalidRange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineParams {
    pub p: u64,
    pub depth: u64,
    pub nmax: u64,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            p: 3,
            depth: 50,
            nmax: 20,
            seed: 20240601,
            format: OutputFormat::Json,
        }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.p % 2 == 0 || !is_prime(self.p) {
            return Err(VerifyError::InvalidPrime(self.p));
        }
        if self.depth == 0 {
            return Err(VerifyError::InvalidDepth);
        }
        if self.nmax == 0 {
            return Err(VerifyError::InvalidRange);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub axioms: Vec<String>,
    pub params: PipelineParams,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }
}

/// Outcome of one check body: pass/fail plus witness, or an error message.
type CheckOutcome = Result<(bool, Value), String>;

pub(crate) struct Ctx<'a> {
    pub params: &'a PipelineParams,
    pub cfg: &'a CurveConfig,
    pub results: Vec<CheckResult>,
}

impl Ctx<'_> {
    fn record(&mut self, id: &str, description: &str, body: impl FnOnce(&Ctx) -> CheckOutcome) {
        let outcome = catch_unwind(AssertUnwindSafe(|| body(self)))
            .unwrap_or_else(|_| Err("check panicked".to_string()));
        let (status, witness) = match outcome {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(msg) => (Status::Error, serde_json::json!({ "error": msg })),
        };
        self.results.push(CheckResult {
            id: id.to_string(),
            description: description.to_string(),
            status,
            witness,
        });
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.results.iter().find(|c| c.id == id).map(|c| c.status)
    }
}

pub fn run_pipeline(params: &PipelineParams) -> Result<VerificationReport, VerifyError> {
    run_pipeline_with(params, &kummer_config())
}

/// Runs every check against the given configuration in place of the
/// standard one, which allows fault injection.
pub fn run_pipeline_with(params: &PipelineParams, cfg: &CurveConfig) -> Result<VerificationReport, VerifyError> {
    params.validate()?;
    let mut ctx = Ctx {
        params,
        cfg,
        results: Vec::new(),
    };
    for (id, description, body) in checks::ALL {
        ctx.record(id, description, body);
    }
    let overall = if ctx.results.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        version: REPORT_VERSION.to_string(),
        axioms: AXIOMS.iter().map(|s| s.to_string()).collect(),
        params: params.clone(),
        checks: ctx.results,
        overall,
    })
}

pub fn emit_report(r: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report is serializable");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut out = format!("report version {}\n", r.version);
            for a in &r.axioms {
                out.push_str(&format!("axiom: {a}\n"));
            }
            let pr = &r.params;
            out.push_str(&format!(
                "params: p={} depth={} nmax={} seed={}\n",
                pr.p, pr.depth, pr.nmax, pr.seed
            ));
            for c in &r.checks {
                out.push_str(&format!("[{}] {}: {} {}\n", c.status, c.id, c.description, c.witness));
            }
            out.push_str(&format!("overall: {}\n", r.overall));
            out
        }
    }
}
