// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_arrovian"))
        .args(args)
        .current_dir(manifest_path("data"))
        .env_remove("ARROVIAN_OUTPUT")
        .env_remove("ARROVIAN_WORKERS")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path("golden").join(name)).expect("golden file")
}

fn assert_golden(args: &[&str], name: &str) {
    let (code, stdout, stderr) = binary(args);
    assert_eq!(code, 0, "{stderr}");
    assert_eq!(stdout, golden(name), "output of {args:?} differs from {name}");
}

#[test]
fn fourier_and_golden() {
    assert_golden(&["fourier", "and:2"], "fourier_and2.json");
}

#[test]
fn check_pair_golden() {
    assert_golden(&["check-pair", "--g", "or:2", "--f", "and:2"], "check_pair_or_and.json");
}

#[test]
fn enumerate_pairs_golden() {
    assert_golden(&["enumerate-pairs", "-m", "2", "-n", "2"], "pairs_2x2.json");
    assert_golden(&["--text", "enumerate-pairs", "-m", "2", "-n", "2"], "pairs_2x2.txt");
}

#[test]
fn agenda_check_golden() {
    assert_golden(&["agenda", "check", "conjunction.txt"], "agenda_check.json");
}

#[test]
fn jars_golden() {
    assert_golden(&["jars", "enumerate", "--agenda", "parity.txt", "-n", "3", "--normal-form"], "jars_parity3.json");
    assert_golden(
        &["jars", "check", "--agenda", "conjunction.txt", "-n", "3", "--fn", "*=maj:3"],
        "jars_check_majority.json",
    );
}

#[test]
fn environment_overrides_config() {
    let out = Command::new(env!("CARGO_BIN_EXE_arrovian"))
        .args(["enumerate-pairs", "-m", "2", "-n", "2"])
        .env("ARROVIAN_OUTPUT", "text")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("pairs_2x2.txt"));

    let out = Command::new(env!("CARGO_BIN_EXE_arrovian"))
        .args(["check-pair", "--g", "and:3", "--f", "and:3"])
        .env("ARROVIAN_MATRIX_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(binary(&["no-such-command"]).0, 2);
    assert_eq!(binary(&["agenda", "check", "missing.txt"]).0, 2);
    assert_eq!(binary(&["jars", "check", "--agenda", "conjunction.txt", "-n", "3", "--fn", "1=maj:3"]).0, 2);
    assert_eq!(binary(&["jars", "check", "--agenda", "conjunction.txt", "-n", "3", "--fn", "*=and:2"]).0, 2);
    let (code, stdout, _) = binary(&["verify", "--suite", "majority-example"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    let (code, _, _) = binary(&["--profile-cap", "2", "verify", "--suite", "majority-example"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_print_help_hint() {
    let (code, stdout, stderr) = binary(&["check-pair", "--g", "or:2"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("--f"), "{stderr}");
}

#[test]
fn verify_is_deterministic_across_workers() {
    let args = ["verify", "--suite", "normal-pairs-2x3", "--suite", "normal-form-classification"];
    let one = binary(&[&["--workers", "1"][..], &args[..]].concat());
    let many = binary(&[&["--workers", "8"][..], &args[..]].concat());
    let again = binary(&[&["--workers", "8"][..], &args[..]].concat());
    assert_eq!(one.0, 0, "{}", one.2);
    assert_eq!(one, many);
    assert_eq!(many, again);
}

#[test]
fn library_entry_matches_binary() {
    let path = manifest_path("data").join("conjunction.txt");
    let lib = arrovian_cli::run(["arrovian", "agenda", "check", path.to_str().unwrap()]);
    assert_eq!(lib.code, 0);
    assert_eq!(lib.stdout, golden("agenda_check.json"));
}
