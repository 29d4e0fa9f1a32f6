//! The verification harness: named checks over the group families,
//! machine-readable reports, and deterministic summaries.

mod checks;
mod report;

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::Error;
use crate::limits::Limits;

pub use checks::CheckOutcome;
pub use report::{digest, emit_report, CheckReport, CheckStatus};

/// The named checks the CLI can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    PropDade,
    ThmExamples2,
    ThmExtensiondade,
    LemmaNormalScan,
    TheoremAScan,
    LemmaDade2,
    LemmaMorethanp,
    FormulaSuite,
    OracleAgreement,
    StructuralInvariants,
}

impl CheckName {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::PropDade => "prop-dade",
            CheckName::ThmExamples2 => "thm-examples2",
            CheckName::ThmExtensiondade => "thm-extensiondade",
            CheckName::LemmaNormalScan => "lemma-normal-scan",
            CheckName::TheoremAScan => "theorem-a-scan",
            CheckName::LemmaDade2 => "lemma-dade2",
            CheckName::LemmaMorethanp => "lemma-morethanp",
            CheckName::FormulaSuite => "formula-suite",
            CheckName::OracleAgreement => "oracle-agreement",
            CheckName::StructuralInvariants => "structural-invariants",
        }
    }

    pub fn all() -> &'static [CheckName] {
        &[
            CheckName::PropDade,
            CheckName::ThmExamples2,
            CheckName::ThmExtensiondade,
            CheckName::LemmaNormalScan,
            CheckName::TheoremAScan,
            CheckName::LemmaDade2,
            CheckName::LemmaMorethanp,
            CheckName::FormulaSuite,
            CheckName::OracleAgreement,
            CheckName::StructuralInvariants,
        ]
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckName::all()
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!(
                    "unknown check '{s}'; known: {}",
                    CheckName::all()
                        .iter()
                        .map(|c| c.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            })
    }
}

/// Parameters of one check invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub prime: Option<u64>,
    pub iterate: Option<u32>,
}

/// The parameter sets a check runs with when none are given, mirroring
/// the default verification battery.
pub fn default_params(name: CheckName) -> Vec<CheckParams> {
    let p = |prime: u64| CheckParams {
        prime: Some(prime),
        iterate: None,
    };
    let pi = |prime: u64, it: u32| CheckParams {
        prime: Some(prime),
        iterate: Some(it),
    };
    match name {
        CheckName::PropDade => [3, 5, 7, 11, 13].iter().map(|&q| p(q)).collect(),
        CheckName::ThmExamples2 => vec![p(7), p(13)],
        CheckName::ThmExtensiondade => vec![pi(3, 1), pi(5, 1), pi(3, 2)],
        CheckName::LemmaNormalScan => vec![p(3)],
        CheckName::TheoremAScan => vec![p(3), p(5)],
        CheckName::LemmaDade2 => vec![pi(3, 0), pi(5, 0), pi(3, 1)],
        CheckName::LemmaMorethanp => vec![p(3), p(5)],
        CheckName::FormulaSuite => vec![CheckParams::default()],
        CheckName::OracleAgreement => vec![p(3)],
        CheckName::StructuralInvariants => vec![CheckParams::default()],
    }
}

/// Limits appropriate for a check at a given prime: the oracle bound is
/// widened to p^4 so the family-A group itself stays within reach.
pub fn limits_for(params: &CheckParams) -> Limits {
    let p = params.prime.unwrap_or(3) as u128;
    Limits::with_oracle_order(p.pow(4).max(243))
}

/// Runs one named check with the given parameters; guard and hypothesis
/// errors surface as skip statuses, any other error as a failure.
pub fn run_check(name: CheckName, params: &CheckParams, limits: &Limits) -> CheckReport {
    let started = Instant::now();
    let prime = params.prime.unwrap_or(3);
    let iterate = params.iterate.unwrap_or(0);
    let result = match name {
        CheckName::PropDade => checks::prop_dade(prime, limits),
        CheckName::ThmExamples2 => checks::thm_examples2(prime, limits),
        CheckName::ThmExtensiondade => {
            checks::thm_extensiondade(prime, params.iterate.unwrap_or(1), limits)
        }
        CheckName::LemmaNormalScan => checks::lemma_normal_scan(prime, limits),
        CheckName::TheoremAScan => checks::theorem_a_scan(prime, limits),
        CheckName::LemmaDade2 => checks::lemma_dade2(prime, iterate, limits),
        CheckName::LemmaMorethanp => checks::lemma_morethanp(prime, limits),
        CheckName::FormulaSuite => checks::formula_suite(limits),
        CheckName::OracleAgreement => checks::oracle_agreement(prime, 50, limits),
        CheckName::StructuralInvariants => checks::structural_invariants(limits),
    };
    let mut pmap = BTreeMap::new();
    if let Some(p) = params.prime {
        pmap.insert("prime".to_string(), json!(p));
    }
    if let Some(it) = params.iterate {
        pmap.insert("iterate".to_string(), json!(it));
    }
    let wall_time_ms = started.elapsed().as_millis();
    match result {
        Ok(outcome) => {
            let status = if outcome.expected == outcome.computed {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            CheckReport {
                name: name.as_str().to_string(),
                params: pmap,
                expected: outcome.expected,
                expected_provenance: outcome.provenance.to_string(),
                computed: outcome.computed,
                status,
                certificate: outcome.certificate,
                certificate_digest: outcome.certificate_digest,
                info: outcome.info,
                wall_time_ms,
            }
        }
        Err(err) => {
            let status = match &err {
                Error::SizeGuard { .. } | Error::CosetBound { .. } | Error::OrbitBound { .. } => {
                    CheckStatus::SkippedSizeGuard
                }
                Error::Hypothesis(_) => CheckStatus::SkippedHypothesis,
                _ => CheckStatus::Fail,
            };
            CheckReport {
                name: name.as_str().to_string(),
                params: pmap,
                expected: Value::Null,
                expected_provenance: String::new(),
                computed: Value::Null,
                status,
                certificate: Value::Null,
                certificate_digest: None,
                info: json!({ "error": err.to_string() }),
                wall_time_ms,
            }
        }
    }
}

/// Runs a check over explicit primes or its default parameter sets.
pub fn run_check_battery(
    name: CheckName,
    primes: &[u64],
    iterate: Option<u32>,
) -> Vec<CheckReport> {
    let param_sets: Vec<CheckParams> = if primes.is_empty() {
        default_params(name)
    } else {
        primes
            .iter()
            .map(|&p| CheckParams {
                prime: Some(p),
                iterate,
            })
            .collect()
    };
    param_sets
        .iter()
        .map(|params| run_check(name, params, &limits_for(params)))
        .collect()
}

#[cfg(test)]
mod tests;
