use std::io::Write;
use std::process::{Command, Output};

use duval_bmy::exact_arith::rat;
use duval_bmy::InvariantReport;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duval-bmy"))
        .args(args)
        .output()
        .unwrap()
}

fn with_file(json: &str, args: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    let mut full = vec!["check", f.path().to_str().unwrap()];
    full.extend_from_slice(args);
    bin(&full)
}

const KUMMER: &str = r#"{
  "kind": "isolated_points",
  "chi_structure_sheaf": 2,
  "c1_squared": "0",
  "points": ["A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1","A1"],
  "canonical_nef_asserted": true
}"#;

#[test]
fn kummer_text_report() {
    let out = with_file(KUMMER, &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("c2:          0"));
    assert!(text.contains("verdict:     HoldsWithEquality"));
}

#[test]
fn structured_output_round_trips() {
    let json = KUMMER.replace("\"canonical_nef_asserted\": true", "\"canonical_nef_asserted\": true, \"gerbe_order\": 3")
        .replace("\"c1_squared\": \"0\"", "\"c1_squared\": \"-7/2\"");
    let out = with_file(&json, &["--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: InvariantReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.c1_squared, rat(-7, 6));
    // c2 = (24 + 7/2 - 24) / 3
    assert_eq!(report.c2, rat(7, 6));
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}

#[test]
fn failing_inequality_exits_three() {
    let json = r#"{"kind": "isolated_points", "chi_structure_sheaf": 1, "c1_squared": "9",
                   "points": ["A1"], "canonical_nef_asserted": true}"#;
    let out = with_file(json, &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout).unwrap().contains("Fails"));
}

#[test]
fn ramification_one_is_a_parse_error() {
    let json = r#"{"kind": "snc_pair", "chi_coarse": 3, "k_squared": "9",
        "divisors": [{"ramification": 1, "chi_divisor": 2, "k_dot": "-3", "self_int": "1"}],
        "crossings": [], "canonical_nef_asserted": true}"#;
    let out = with_file(json, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("ramification must be ≥ 2"));
}

#[test]
fn missing_file_is_a_parse_error() {
    assert_eq!(bin(&["check", "/nonexistent/surface.json"]).status.code(), Some(1));
}

#[test]
fn identity_usage_error() {
    assert_eq!(bin(&["identity", "--n", "1", "--which", "type_a"]).status.code(), Some(1));
    let ok = bin(&["identity", "--n", "12", "--which", "type_a"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("143/144"));
}

#[test]
fn table_oracle_is_deterministic() {
    let a = bin(&["table", "--max-n", "12", "--oracle"]);
    let b = bin(&["table", "--max-n", "12", "--oracle"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(!text.contains(" NO"));
    assert_eq!(text.lines().count(), 1 + 11 + 11 + 3);
}

#[test]
fn shipped_sample_files_evaluate() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");
    for (name, verdict) in [
        ("kummer.json", "HoldsWithEquality"),
        ("triangle.json", "NotApplicable"),
        ("e8_gerbe.json", "Holds"),
    ] {
        let path = format!("{dir}/{name}");
        let out = bin(&["check", &path, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let report: InvariantReport = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report.verdict.to_string(), verdict, "{name}");
    }
}
