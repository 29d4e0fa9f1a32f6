use super::*;

#[test]
fn empty_report_list_is_a_valid_document() {
    let (json, table, exit) = emit_report(&[]);
    assert_eq!(exit, 0);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["schema"], serde_json::json!("v1"));
    assert_eq!(doc["reports"], serde_json::json!([]));
    assert!(table.contains("check"));
}

#[test]
fn reports_are_deterministic_across_reruns() {
    let params = CheckParams {
        prime: Some(3),
        iterate: None,
    };
    let limits = limits_for(&params);
    let a = run_check(CheckName::PropDade, &params, &limits);
    let b = run_check(CheckName::PropDade, &params, &limits);
    let (ja, _, _) = emit_report(std::slice::from_ref(&a));
    let (jb, _, _) = emit_report(std::slice::from_ref(&b));
    assert_eq!(ja, jb);
}

#[test]
fn embedded_certificates_revalidate_on_load() {
    let params = CheckParams {
        prime: Some(3),
        iterate: None,
    };
    let limits = limits_for(&params);
    let report = run_check(CheckName::PropDade, &params, &limits);
    assert_eq!(report.status, CheckStatus::Pass);
    let doc: crate::induction::CertificateDoc =
        serde_json::from_value(report.certificate.clone()).unwrap();
    let inst = crate::families::family_a(3).unwrap();
    let cert =
        crate::induction::DecompositionCertificate::from_doc(&doc, &inst.group, &limits).unwrap();
    assert_eq!(cert.eta(), 2);
}

#[test]
fn mixed_outcomes_set_the_exit_code() {
    let params = CheckParams {
        prime: Some(3),
        iterate: None,
    };
    let limits = limits_for(&params);
    let good = run_check(CheckName::PropDade, &params, &limits);
    let mut bad = good.clone();
    bad.status = CheckStatus::Fail;
    let (_, _, exit) = emit_report(&[good.clone(), bad]);
    assert_eq!(exit, 1);
    let (_, _, exit) = emit_report(&[good]);
    assert_eq!(exit, 0);
}

#[test]
fn unknown_check_names_are_rejected() {
    assert!("prop-dade".parse::<CheckName>().is_ok());
    assert!("no-such".parse::<CheckName>().is_err());
}

#[test]
fn hypothesis_violations_surface_as_skips() {
    // Family B requires 3 | p - 1: p = 11 is a hypothesis violation, not
    // a failure.
    let params = CheckParams {
        prime: Some(11),
        iterate: None,
    };
    let limits = limits_for(&params);
    let report = run_check(CheckName::ThmExamples2, &params, &limits);
    assert_eq!(report.status, CheckStatus::SkippedHypothesis);
}
