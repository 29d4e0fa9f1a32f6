use std::path::PathBuf;
use std::process::{Command, Output};

fn pchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn group_show_prints_canonical_presentations() {
    let out = pchar(&["group", "show", "--family", "a", "--prime", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "p 3\ngens 4\nconj 2 1 = g2 g3\nconj 3 1 = g3 g4\n"
    );
    // No trailing whitespace anywhere.
    for line in stdout(&out).lines() {
        assert_eq!(line, line.trim_end());
    }

    let out = pchar(&["group", "show", "--family", "b", "--prime", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p 7\ngens 6\n"));
    assert!(text.contains("conj 3 1 = g3 g4"));

    // Identical invocations produce identical bytes.
    let again = pchar(&["group", "show", "--family", "b", "--prime", "7"]);
    assert_eq!(stdout(&again), text);

    let bad = pchar(&["group", "show", "--family", "b", "--prime", "5"]);
    assert!(!bad.status.success());
}

#[test]
fn eta_end_to_end_through_a_presentation_file() {
    let dir = std::env::temp_dir().join("pchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let pc: PathBuf = dir.join("a3.pc");
    let show = pchar(&["group", "show", "--family", "a", "--prime", "3"]);
    std::fs::write(&pc, stdout(&show)).unwrap();

    let out = pchar(&[
        "eta",
        "--group",
        pc.to_str().unwrap(),
        "--subgroup",
        "g2, g4",
        "--char",
        "g2:0,g4:1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("eta = 2\n"));
    // Certificate JSON follows and re-parses.
    let json_start = text.find('{').unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(doc["eta"], serde_json::json!(2));
    assert_eq!(doc["checks_passed"], serde_json::json!(true));

    // Underdetermined assignments are rejected.
    let out = pchar(&[
        "eta",
        "--group",
        pc.to_str().unwrap(),
        "--subgroup",
        "g2, g4",
        "--char",
        "g4:1",
    ]);
    assert!(!out.status.success());
}

#[test]
fn oracle_irr_reports_the_table() {
    let dir = std::env::temp_dir().join("pchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let pc: PathBuf = dir.join("a3-oracle.pc");
    let show = pchar(&["group", "show", "--family", "a", "--prime", "3"]);
    std::fs::write(&pc, stdout(&show)).unwrap();

    let out = pchar(&["oracle", "irr", "--group", pc.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], serde_json::json!(17));
    assert_eq!(doc["order"], serde_json::json!(81));
}

#[test]
fn verify_writes_deterministic_reports_and_exit_codes() {
    let dir = std::env::temp_dir().join("pchar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let run = |path: &PathBuf| {
        pchar(&[
            "verify",
            "--check",
            "prop-dade",
            "--prime",
            "3",
            "--prime",
            "5",
            "--out",
            path.to_str().unwrap(),
        ])
    };
    let first = run(&out_path);
    assert!(first.status.success());
    let doc1 = std::fs::read_to_string(&out_path).unwrap();
    let second = run(&out_path);
    assert!(second.status.success());
    let doc2 = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(doc1, doc2, "reruns must be byte-identical");

    let parsed: serde_json::Value = serde_json::from_str(&doc1).unwrap();
    assert_eq!(parsed["schema"], serde_json::json!("v1"));
    assert_eq!(parsed["reports"].as_array().unwrap().len(), 2);
    for report in parsed["reports"].as_array().unwrap() {
        assert_eq!(report["status"], serde_json::json!("pass"));
    }

    // The summary table goes to stdout.
    assert!(stdout(&first).contains("prop-dade"));

    // Unknown checks are an error.
    let bad = pchar(&["verify", "--check", "no-such-check"]);
    assert!(!bad.status.success());
}

#[test]
fn verify_without_primes_runs_the_default_battery() {
    let out = pchar(&["verify", "--check", "prop-dade"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // Five rows, one per default prime, all passing.
    assert_eq!(text.matches("prop-dade").count(), 5);
    assert_eq!(text.matches(" pass").count(), 5);
}

#[test]
fn scan_subcommand_runs_the_gap_scan() {
    let out = pchar(&["scan", "theorem-a", "--prime", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("theorem-a-scan"));
    assert!(stdout(&out).contains("pass"));
}
