//! End-to-end runs of the binary against the shipped scene files.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_blowup-calc"))
}

fn scenes(name: &str) -> String {
    format!("{}/../../scenes/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn blowup_reports_two_charts() {
    let out = bin()
        .args(["blowup", "--scene", &scenes("axes.scene"), "--center", "origin"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("chart R:0"));
    assert!(text.contains("chart R:1"));
    assert!(text.contains("exceptional on R:1: x"));
}

#[test]
fn blowup_with_strict_transform_of_the_cusp() {
    let out = bin()
        .args([
            "blowup",
            "--scene",
            &scenes("cusp.scene"),
            "--center",
            "origin",
            "--transform",
            "cusp",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("strict transform of cusp"));
    assert!(text.contains("u0^2 - x"));
}

#[test]
fn poset_blowup_runs() {
    let out = bin()
        .args(["poset-blowup", "--scene", &scenes("axes.scene"), "--diagram", "axes"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("E'[0]"));
    assert!(text.contains("E'[a]"));
}

#[test]
fn pushout_blowup_runs() {
    let out = bin()
        .args([
            "pushout-blowup",
            "--scene",
            &scenes("axes.scene"),
            "--w",
            "origin",
            "--z",
            "xaxis",
            "--y",
            "yaxis",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("E'Y"));
}

#[test]
fn composite_deformation_reports_vanishing() {
    let out = bin()
        .args([
            "deform",
            "--scene",
            &scenes("chain.scene"),
            "--kind",
            "composite",
            "--input",
            "c",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("both boundary E'Z empty"));
}

#[test]
fn multiple_deformation_runs() {
    let out = bin()
        .args([
            "deform",
            "--scene",
            &scenes("family.scene"),
            "--kind",
            "multiple",
            "--input",
            "F",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("E'{1,2}"));
}

#[test]
fn verify_suite_passes() {
    let out = bin().args(["verify", "--suite"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("13 checks, 0 failed"));
}

#[test]
fn verify_single_check() {
    let out = bin().args(["verify", "ID-SUBTRACT"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass"));
}

#[test]
fn verify_tag_filter() {
    let out = bin()
        .args(["verify", "--suite", "poset", "--output", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let verdicts = doc["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    for v in verdicts {
        assert!(v["name"].as_str().unwrap().starts_with("ID-POSET"));
    }
}

#[test]
fn verify_unknown_tag_is_empty_success() {
    let out = bin().args(["verify", "--suite", "nonexistent"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 checks, 0 failed"));
}

#[test]
fn unknown_check_is_an_input_error() {
    let out = bin().args(["verify", "ID-NOPE"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_scene_is_an_input_error() {
    let dir = std::env::temp_dir().join("blowup-calc-badscene");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.scene");
    std::fs::write(&path, "lattice L = {a<b, b<a}\n").unwrap();
    let out = bin()
        .args(["poset-blowup", "--scene", path.to_str().unwrap(), "--diagram", "d"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid lattice"));
}

#[test]
fn json_reports_are_deterministic() {
    let run = || {
        bin()
            .args(["verify", "--suite", "--output", "json"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn blowup_json_schema() {
    let out = bin()
        .args([
            "blowup",
            "--scene",
            &scenes("axes.scene"),
            "--center",
            "origin",
            "--output",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("well-formed JSON");
    assert!(doc["charts"].as_array().unwrap().len() == 2);
    assert!(doc["divisors"]["E"].as_array().is_some());
    assert!(doc["verdicts"].as_array().unwrap().is_empty());
}

#[test]
fn scene_echo_round_trips() {
    let first = bin()
        .args(["scene", "--scene", &scenes("axes.scene")])
        .output()
        .unwrap();
    assert!(first.status.success());
    let dir = std::env::temp_dir().join("blowup-calc-echo");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("echo.scene");
    std::fs::write(&path, &first.stdout).unwrap();
    let second = bin()
        .args(["scene", "--scene", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
}
