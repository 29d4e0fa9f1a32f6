use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Outcome of a named check. Guard and hypothesis errors are reported as
/// distinct skip statuses, not failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-size-guard")]
    SkippedSizeGuard,
    #[serde(rename = "skipped-hypothesis")]
    SkippedHypothesis,
}

/// One named check run. `status` is Pass exactly when `expected` and
/// `computed` agree as exact values; `info` carries auxiliary data
/// (spectra, counts) that does not enter the comparison. Wall time is
/// kept out of the serialized document so reruns are byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub expected: Value,
    pub expected_provenance: String,
    pub computed: Value,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub certificate: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_digest: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub info: Value,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    schema: &'static str,
    reports: &'a [CheckReport],
}

/// Serializes reports to the versioned JSON document and a human summary
/// table; the returned exit code is 1 when any check failed.
pub fn emit_report(reports: &[CheckReport]) -> (String, String, i32) {
    let doc = ReportDoc {
        schema: "v1",
        reports,
    };
    let json = serde_json::to_string_pretty(&doc).expect("reports serialize");
    let mut table = String::new();
    let header = format!(
        "{:<22} {:<26} {:<22} {:<22} {:<8} {:>8}\n",
        "check", "params", "expected", "computed", "status", "ms"
    );
    table.push_str(&header);
    table.push_str(&"-".repeat(header.len() - 1));
    table.push('\n');
    let mut exit = 0;
    for r in reports {
        if r.status == CheckStatus::Fail {
            exit = 1;
        }
        let params = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        table.push_str(&format!(
            "{:<22} {:<26} {:<22} {:<22} {:<8} {:>8}\n",
            r.name,
            truncate(&params, 26),
            truncate(&compact(&r.expected), 22),
            truncate(&compact(&r.computed), 22),
            status_str(r.status),
            r.wall_time_ms
        ));
    }
    (json, table, exit)
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::SkippedSizeGuard => "skip-sz",
        CheckStatus::SkippedHypothesis => "skip-hy",
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn truncate(s: &str, n: usize) -> String {
    if s.len() <= n {
        s.to_string()
    } else {
        format!("{}..", &s[..n - 2])
    }
}

/// FNV-1a content digest used to reference large certificate sets from a
/// report without embedding them.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a:{hash:016x}")
}
