//! End-to-end runs of the `layercode` binary: build artifacts, verify exit
//! codes, mutation detection, analyze report shape, geometry export.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_layercode")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("layercode-pipeline-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn build_builtin(name: &str, stem: &str) -> PathBuf {
    let out = tmp(stem);
    let output = run(&[
        "build",
        "--builtin",
        name,
        "--c",
        "2",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "build {name} failed: {output:?}");
    out.with_extension("json")
}

#[test]
fn build_writes_all_artifacts_with_manifest() {
    let json = build_builtin("steane", "steane-artifacts");
    let stem = json.with_extension("");
    for ext in ["json", "x.mtx", "z.mtx", "geometry.json", "manifest.json"] {
        let path = stem.with_extension(ext);
        assert!(path.exists(), "missing {}", path.display());
    }
    let manifest: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(stem.with_extension("manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["subcommand"], "build");
    assert_eq!(manifest["outputs"].as_array().unwrap().len(), 4);
    for entry in manifest["outputs"].as_array().unwrap() {
        assert_eq!(entry["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn verify_levels_and_exit_codes() {
    let json = build_builtin("c422", "c422-verify");
    let fast = run(&["verify", json.to_str().unwrap(), "--level", "fast"]);
    assert!(fast.status.success());
    let full = run(&["verify", json.to_str().unwrap(), "--level", "full"]);
    assert!(full.status.success());

    // flipped support bit: commutation failure, exit 1
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let bit = doc["x_checks"][3]["support"][0].as_u64().unwrap();
    doc["x_checks"][3]["support"][0] = serde_json::json!(bit ^ 1);
    let mutated = tmp("c422-flipped.json");
    std::fs::write(&mutated, doc.to_string()).unwrap();
    let bad = run(&["verify", mutated.to_str().unwrap(), "--level", "fast"]);
    assert_eq!(bad.status.code(), Some(1));
    let report = String::from_utf8_lossy(&bad.stdout);
    assert!(report.contains("commutation"), "report: {report}");

    // missing file: input error, exit 2
    let missing = run(&["verify", "/nonexistent/code.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn malformed_input_is_a_schema_error() {
    let path = tmp("garbage.json");
    std::fs::write(&path, "{\"name\": \"x\", \"n\": ").unwrap();
    let out = run(&[
        "build",
        "--input",
        path.to_str().unwrap(),
        "--output",
        tmp("garbage-out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_tags_every_number() {
    let json = build_builtin("rep3", "rep3-analyze");
    let out = run(&[
        "analyze",
        json.to_str().unwrap(),
        "--distance",
        "--barrier",
        "--relations",
        "--seed",
        "0",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(report["barrier"]["input_X"]["value"], 1);
    assert_eq!(report["barrier"]["input_X"]["mode"], "exact");
    assert_eq!(report["barrier"]["input_Z"]["value"], 0);
    assert!(
        report["barrier"]["layer_sweep_X"]["value"]
            .as_u64()
            .unwrap()
            <= 2
    );
    // every numeric leaf under distance/barrier carries a mode tag
    for section in ["distance", "barrier"] {
        for (_key, entry) in report[section].as_object().unwrap() {
            assert!(
                entry.get("mode").is_some(),
                "untagged entry in {section}: {entry}"
            );
        }
    }
}

#[test]
fn analyze_runs_are_reproducible() {
    let json = build_builtin("c422", "c422-repro");
    let args = [
        "analyze",
        json.to_str().unwrap(),
        "--distance",
        "--seed",
        "42",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same seed, same bytes");
}

#[test]
fn geometry_export_matches_registry() {
    let json = build_builtin("rep3", "rep3-geometry");
    let out = run(&["export-geometry", json.to_str().unwrap()]);
    assert!(out.status.success());
    let geo: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(geo["layers"].as_array().unwrap().len(), 5);
    let lines = geo["defect_lines"].as_array().unwrap();
    let z_lines = lines
        .iter()
        .filter(|l| l["kind"].as_str().unwrap().ends_with("-z"))
        .count();
    let y_lines = lines
        .iter()
        .filter(|l| l["kind"].as_str().unwrap().contains("y"))
        .count();
    let x_lines = lines
        .iter()
        .filter(|l| l["kind"].as_str().unwrap().ends_with("-x"))
        .count();
    assert_eq!((z_lines, y_lines, x_lines), (4, 0, 0));
}

#[test]
fn build_rejects_invalid_inputs() {
    // anticommuting input
    let path = tmp("anticommuting.json");
    std::fs::write(
        &path,
        "{\"name\":\"bad\",\"n\":1,\"hx\":[[0]],\"hz\":[[0]]}",
    )
    .unwrap();
    let out = run(&[
        "build",
        "--input",
        path.to_str().unwrap(),
        "--output",
        tmp("bad-out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("commute"), "stderr: {err}");
}

#[test]
fn blocks_flag_tiles() {
    let out = tmp("rep3-tiled");
    let output = run(&[
        "build",
        "--builtin",
        "rep3",
        "--c",
        "2",
        "--blocks",
        "3",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("249 qubits"), "stdout: {text}");
}
