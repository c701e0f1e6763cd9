//! End-to-end exit-code and format checks for the binary.

use std::io::Write;
use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lindeg"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("lindeg-test-{name}-{}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

const UNIFORM_24: &str = r#"{"n":4,"r":2,"values":[
    {"set":[1,2],"val":"0"},{"set":[1,3],"val":"0"},{"set":[1,4],"val":"0"},
    {"set":[2,3],"val":"0"},{"set":[2,4],"val":"0"},{"set":[3,4],"val":"0"}]}"#;

const NOT_A_MATROID: &str = r#"{"n":4,"r":2,"values":[
    {"set":[1,2],"val":"0"},{"set":[1,3],"val":"0"},{"set":[1,4],"val":"1"},
    {"set":[2,3],"val":"1"},{"set":[2,4],"val":"1"},{"set":[3,4],"val":"0"}]}"#;

const COUNTEREXAMPLE_FLAG: &str = r#"{
  "n": 4,
  "matroids": [
    {"n":4,"r":1,"values":[{"set":[1],"val":"0"},{"set":[2],"val":"0"},{"set":[3],"val":"0"},{"set":[4],"val":"0"}]},
    {"n":4,"r":2,"values":[{"set":[1,2],"val":"1"},{"set":[1,3],"val":"1"},{"set":[1,4],"val":"0"},{"set":[2,3],"val":"2"},{"set":[2,4],"val":"0"},{"set":[3,4],"val":"0"}]}
  ],
  "S": [[1]]
}"#;

#[test]
fn check_matroid_exit_codes() {
    let valid = write_temp("valid", UNIFORM_24);
    assert_eq!(binary().arg("check-matroid").arg(&valid).status().unwrap().code(), Some(0));

    let invalid = write_temp("invalid", NOT_A_MATROID);
    let out = binary().arg("check-matroid").arg(&invalid).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("I={1,2}"), "witness missing: {text}");

    let truncated = write_temp("truncated", r#"{"n": 4, "r""#);
    assert_eq!(
        binary().arg("check-matroid").arg(&truncated).status().unwrap().code(),
        Some(2)
    );
}

#[test]
fn theorem_a_exit_codes() {
    let member = write_temp(
        "member",
        &COUNTEREXAMPLE_FLAG.replace(r#""S": [[1]]"#, r#""S": [[]]"#),
    );
    assert_eq!(binary().arg("theorem-a").arg(&member).status().unwrap().code(), Some(0));

    let non_member = write_temp("non-member", COUNTEREXAMPLE_FLAG);
    let out = binary().arg("theorem-a").arg(&non_member).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["agree"], serde_json::json!(true));
    assert_eq!(json["member"], serde_json::json!(false));

    // A flag file whose vectors fail the exchange axiom is a usage error.
    // (0,0,1,1,1,0) violates the three-term relation with values {0,1,2}.
    let invalid = write_temp(
        "invalid-flag",
        &COUNTEREXAMPLE_FLAG
            .replace(r#"{"set":[1,2],"val":"1"}"#, r#"{"set":[1,2],"val":"0"}"#)
            .replace(r#"{"set":[1,3],"val":"1"}"#, r#"{"set":[1,3],"val":"0"}"#)
            .replace(r#"{"set":[1,4],"val":"0"}"#, r#"{"set":[1,4],"val":"1"}"#)
            .replace(r#"{"set":[2,3],"val":"2"}"#, r#"{"set":[2,3],"val":"1"}"#)
            .replace(r#"{"set":[2,4],"val":"0"}"#, r#"{"set":[2,4],"val":"1"}"#),
    );
    assert_eq!(binary().arg("theorem-a").arg(&invalid).status().unwrap().code(), Some(2));
}

#[test]
fn dressian_modes_agree() {
    let file = write_temp("dressian", COUNTEREXAMPLE_FLAG);
    for mode in ["consecutive", "all-pairs"] {
        let out = binary()
            .args(["dressian", "--mode", mode])
            .arg(&file)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(1), "mode {mode}");
    }
}

#[test]
fn fan_requires_deep_for_large_systems() {
    let status = binary()
        .args(["fan", "--ranks", "1,2,3", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let err = String::from_utf8(status.stderr).unwrap();
    assert!(err.contains("--deep"), "hint missing: {err}");
}

#[test]
fn fan_budget_error() {
    let out = binary()
        .args(["fan", "--ranks", "1,2", "--n", "4", "--budget", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"), "partial progress report missing: {err}");
}

#[test]
fn relations_full_degeneration_note() {
    let out = binary()
        .args(["relations", "--ranks", "1,2", "--set", "{1,2,3,4}", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("no nontrivial relations"));
}

#[test]
fn relations_rejects_bad_ranks() {
    let out = binary()
        .args(["relations", "--ranks", "3,2", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_counterexample_reproduces_failing_relation() {
    let out = binary()
        .args(["realize", "--ranks", "1,2", "--n", "4", "--counterexample"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["fldr_member"], serde_json::json!(true));
    assert_eq!(json["lfldr_member"], serde_json::json!(false));
    assert_eq!(json["contained"], serde_json::json!(true));
    assert_eq!(json["projected_contained"], serde_json::json!(false));
    let failing = json["failing_relations"].as_array().unwrap();
    assert!(failing
        .iter()
        .any(|f| f.as_str().unwrap() == "p_{2}*p_{1,4} (+) p_{4}*p_{1,2}"));
}

#[test]
fn realize_rejects_decreasing_ranks() {
    let out = binary()
        .args(["realize", "--ranks", "2,1", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_verifies_matrices_from_file() {
    // Matrix entries as expression strings.
    let chain = write_temp(
        "chain",
        r#"{
          "n": 4,
          "S": [[1]],
          "matrices": [
            {"rows":1,"cols":4,"entries":[["1","1","1","1"]]},
            {"rows":2,"cols":4,"entries":[["1","1","1","1"],["t^1","0","t^2","1"]]}
          ]
        }"#,
    );
    let out = binary().args(["realize", "--from"]).arg(&chain).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "degenerate containment must fail");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["classical_relations_hold"], serde_json::json!([false]));
    assert_eq!(json["containments"], serde_json::json!([false]));

    let flag = write_temp(
        "chain-flag",
        r#"{
          "n": 4,
          "S": [[]],
          "matrices": [
            {"rows":1,"cols":4,"entries":[["1","1","1","1"]]},
            {"rows":2,"cols":4,"entries":[["1","1","1","1"],["t^1","0","t^2","1"]]}
          ]
        }"#,
    );
    assert_eq!(
        binary().args(["realize", "--from"]).arg(&flag).status().unwrap().code(),
        Some(0)
    );
}

#[test]
fn deep_fan_matches_reported_values() {
    let out = binary()
        .args(["fan", "--ranks", "1,2,3", "--n", "4", "--deep"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["f_vector"], serde_json::json!([1, 20, 79, 78]));
    assert_eq!(json["lineality_dim"], serde_json::json!(3));
    assert_eq!(json["homogeneity_dim"], serde_json::json!(3));
    assert_eq!(json["maximal_cone_count"], serde_json::json!(78));
}

#[test]
fn homogeneity_matches_fan_lineality() {
    let out = binary()
        .args(["homogeneity", "--ranks", "1,2", "--sets", "{1}", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["projective_dim"], serde_json::json!(4));
}

#[test]
fn poset_scan_exit_zero() {
    let out = binary()
        .args([
            "poset", "--ranks", "1,2", "--n", "4", "--covers", "{}<{2}", "--samples", "5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn corpus_test_smoke() {
    let out = binary()
        .args([
            "corpus-test", "--suite", "theorem-a", "--n-max", "4", "--count", "20",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failures"), "{text}");
}
