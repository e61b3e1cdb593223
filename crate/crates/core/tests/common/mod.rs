//! Toy end-to-end pipeline driven through the `forge` binary.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub const SEED: &str = "7";
pub const STAGES: &str = "300,100,30,10,0";

/// Files whose digests are pinned, relative to the work directory.
pub const PINNED: [&str; 11] = [
    "mono.jsonl",
    "ncm.jsonl",
    "ncm_cmi.json",
    "calib.json",
    "scm.jsonl",
    "stages/manifest.json",
    "stages/stage_0.jsonl",
    "stages/stage_1.jsonl",
    "stages/stage_2.jsonl",
    "stages/stage_3.jsonl",
    "stages/stage_4.jsonl",
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/toy")
}

pub fn golden_path() -> PathBuf {
    fixtures().join("golden.sha256")
}

/// Run `forge` in `dir`, panicking with stderr unless it exits 0; returns the report.
pub fn forge(dir: &Path, args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_forge"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn forge");
    assert!(
        out.status.success(),
        "forge {args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("report is json")
}

/// preprocess -> cmi -> calibrate -> generate -> curriculum, in `dir`.
pub fn run_pipeline(dir: &Path, threads: &str) {
    for f in ["raw.tsv", "ncm_raw.tsv", "emoji.tsv"] {
        fs::copy(fixtures().join(f), dir.join(f)).unwrap();
    }
    let common = ["--seed", SEED, "--threads", threads];
    let run = |args: &[&str]| forge(dir, &[&common[..], args].concat());

    run(&["preprocess", "--in", "raw.tsv", "--emoji", "emoji.tsv", "--out", "mono.jsonl"]);
    run(&["preprocess", "--in", "ncm_raw.tsv", "--emoji", "emoji.tsv", "--out", "ncm.jsonl"]);
    let cmi = run(&["cmi", "--in", "ncm.jsonl", "--report", "ncm_cmi.json"]);
    let target = cmi["counts"]["mean"].to_string();
    let calib = run(&[
        "calibrate", "--source", "mono.jsonl", "--target-cmi", &target, "--strategy", "phrase",
        "--branch", "below-peak", "--grid", "0:1:0.05", "--samples", "300", "--out", "calib.json",
    ]);
    let tau = calib["counts"]["tau_star"].to_string();
    run(&["generate", "--source", "mono.jsonl", "--strategy", "phrase", "--tau", &tau, "--count", "400", "--out", "scm.jsonl"]);
    run(&["curriculum", "--scm", "scm.jsonl", "--ncm", "ncm.jsonl", "--stages", STAGES, "--out-dir", "stages"]);
}

pub fn sha256_file(path: &Path) -> String {
    forge::rng::sha256_hex(&fs::read(path).unwrap_or_else(|e| panic!("{}: {e}", path.display())))
}

/// `digest  path` lines for the pinned files.
pub fn digest_lines(dir: &Path) -> String {
    PINNED.iter().map(|f| format!("{}  {f}\n", sha256_file(&dir.join(f)))).collect()
}
