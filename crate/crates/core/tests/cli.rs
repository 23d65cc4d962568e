//! CLI-level tests: golden catalog, spec-level command examples, JSON
//! schema conformance and exit codes.

use std::process::{Command, Output};

fn rankone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn schema_validator(name: &str) -> jsonschema::Validator {
    let path = format!("{}/../../schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema parses");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, instance: &serde_json::Value) {
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn catalog_json_matches_golden_copy() {
    let out = rankone(&["catalog", "--format", "json", "--max-q", "6"]);
    assert!(out.status.success());
    let golden = include_str!("../src/golden/catalog.json");
    assert_eq!(stdout_str(&out).trim(), golden.trim());
}

#[test]
fn catalog_json_validates_against_schema() {
    let out = rankone(&["catalog", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert_valid(&schema_validator("catalog.schema.json"), &doc);
    // no BII(2) anywhere
    let rows = doc.as_array().unwrap();
    assert!(!rows
        .iter()
        .any(|r| r["family"] == "BII" && r["q"] == serde_json::json!(2)));
}

#[test]
fn catalog_text_mode_lists_all_families() {
    let out = rankone(&["catalog"]);
    let text = stdout_str(&out);
    for tag in ["AI", "AII", "AIII", "BII", "CII", "FII"] {
        assert!(text.lines().any(|l| l.starts_with(tag)), "{tag} missing");
    }
}

#[test]
fn classify_exact_half_pi_pair_is_l1_not_l2() {
    let out = rankone(&[
        "classify", "--space", "AIII", "--q", "2", "--t1", "1/2pi", "--t2", "1/2pi",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert_eq!(doc["l1"], serde_json::json!(true));
    assert_eq!(doc["l2"], serde_json::json!(false));
    assert_eq!(doc["dim_sum"], serde_json::json!(4));
    assert_eq!(doc["dim_gk"], serde_json::json!(4));
    assert_valid(&schema_validator("classify.schema.json"), &doc);
}

#[test]
fn classify_triple_validates() {
    let out = rankone(&[
        "classify", "--space", "FII", "--t1", "1/2pi", "--t2", "0.7", "--t3", "1.1",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert_eq!(doc["l2"], serde_json::json!(true));
    assert_valid(&schema_validator("classify.schema.json"), &doc);
}

#[test]
fn dims_emits_odd_integers_for_su2() {
    let out = rankone(&["dims", "--space", "AI", "--n-max", "3"]);
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,dim,quadrature_dim,rel_err");
    assert_eq!(lines[1], "0,1,,");
    assert_eq!(lines[2], "1,3,,");
    assert_eq!(lines[3], "2,5,,");
    assert_eq!(lines[4], "3,7,,");
}

#[test]
fn dims_quadrature_column_agrees() {
    let out = rankone(&[
        "dims",
        "--space",
        "CII",
        "--q",
        "2",
        "--n-max",
        "5",
        "--check-quadrature",
    ]);
    let text = stdout_str(&out);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let rel: f64 = cols[3].parse().expect("rel_err column");
        assert!(rel <= 1e-8, "{line}");
    }
}

#[test]
fn spherical_json_validates_and_oracle_agrees() {
    let out = rankone(&[
        "spherical",
        "--space",
        "AII",
        "--n",
        "40",
        "--t",
        "0.9",
        "--oracle",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert_valid(&schema_validator("spherical.schema.json"), &doc);
    let diff = doc["oracle"]["abs_diff"].as_f64().unwrap();
    assert!(diff <= 1e-10, "{diff}");
}

#[test]
fn norm_json_validates_and_agrees() {
    let out = rankone(&[
        "norm", "--space", "BII", "--q", "3", "--t1", "1/2pi", "--t2", "1/2pi", "--n-max", "20000",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert_valid(&schema_validator("norm.schema.json"), &doc);
    assert_eq!(doc["verdict"], serde_json::json!("Convergent"));
    assert_eq!(doc["agree"], serde_json::json!(true));
}

#[test]
fn norm_csv_mode_prints_checkpoints_then_diagnosis() {
    let out = rankone(&[
        "norm", "--space", "AI", "--t1", "0.7", "--t2", "0.9", "--n-max", "5000",
    ]);
    let text = stdout_str(&out);
    assert!(text.starts_with("N,S_N,block_mean\n"));
    assert!(text.contains("\"verdict\""));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--space", "XY", "--t1", "0.1", "--t2", "0.2"][..],
        &["classify", "--space", "AIII", "--t1", "0.1", "--t2", "0.2"][..],
        &[
            "classify", "--space", "AI", "--q", "3", "--t1", "0.1", "--t2", "0.2",
        ][..],
        &[
            "classify", "--space", "BII", "--q", "2", "--t1", "0.1", "--t2", "0.2",
        ][..],
        &["classify", "--space", "AI", "--t1", "zzz", "--t2", "0.2"][..],
        &["spherical", "--space", "AI", "--n", "2", "--t", "1/0pi"][..],
        &["catalog", "--max-q", "2"][..],
        &["norm", "--space", "AI", "--t1", "0.1", "--t2", "0.2", "--n-max", "0"][..],
    ] {
        let out = rankone(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    // malformed flags (clap) also exit 2
    let out = rankone(&["catalog", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computational_errors_exit_one() {
    // n beyond the hypergeometric-oracle range surfaces as a computational error
    let out = rankone(&[
        "spherical",
        "--space",
        "AI",
        "--n",
        "500",
        "--t",
        "0.5",
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout_str(&out));
}

#[test]
fn bii_q2_exclusion_names_isomorphic_space() {
    let out = rankone(&[
        "classify", "--space", "BII", "--q", "2", "--t1", "0.1", "--t2", "0.2",
    ]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("isomorphic to SU(2)/SO(2)"), "{err}");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("rankone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    let out = rankone(&[
        "catalog",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.trim_start().starts_with('['));
    std::fs::remove_dir_all(&dir).ok();
}
