use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cometcount"))
        .env("COMETCOUNT_CACHE_DIR", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(cache: &Path, args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(cache, &full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn epoly_genus_zero_three_punctures() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["epoly", "--genus", "0", "--mu", "1,1;1,1;1,1"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["d_mu"], 0);
    assert_eq!(v["E"], "1");
    assert_eq!(v["checks"]["routes_agree"], true);
}

#[test]
fn apoly_genus_one_rank_one() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["apoly", "--genus", "1", "--mu", "1"]);
    assert_eq!(v["A"], "q");
    assert_eq!(v["d_mu"], 2);
}

#[test]
fn mhp_specializes() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["mhp", "-g", "1", "--mu", "2"]);
    assert_eq!(v["Hc"], "q^2*t^4 + 2*q*t^3 + t^2");
    assert_eq!(v["checks"]["specializes_to_E"], true);
    assert_eq!(v["checks"]["pure_part_is_A"], true);
}

#[test]
fn count_matches_epoly() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["count", "--mult", "--genus", "0", "--mu", "1,1;1,1;1,1", "--q", "5"]);
    assert_eq!(v["raw_count"], "120");
    assert_eq!(v["per_pgl"], "1");
    assert_eq!(v["checks"]["matches_E"], true);
    assert_eq!(v["checks"]["free_action"], true);
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "hmu", "-g", "1", "--mu", "2,1;1,1,1"];
    let a = run(dir.path(), &args);
    let b = run(dir.path(), &args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "epoly", "-g", "0", "--mu", "2,1;2,1;1,1,1"];
    let cold = run(dir.path(), &args);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
    let warm = run(dir.path(), &args);
    let mut no_cache = args.to_vec();
    no_cache.insert(0, "--no-cache");
    let off = run(dir.path(), &no_cache);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, off.stdout);
}

#[test]
fn timings_only_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["apoly", "-g", "1", "--mu", "1"]);
    assert_eq!(v["timings"], serde_json::json!({}));
    let v = json(dir.path(), &["--timings", "apoly", "-g", "1", "--mu", "1"]);
    assert!(!v["timings"].as_object().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["epoly", "-g", "0", "--mu", "1,x"],
        vec!["count", "-g", "0", "--mu", "1,1;1,1;1,1", "--q", "5"],
        vec!["count", "--mult", "-g", "0", "--mu", "1,1;1,1;1,1", "--q", "4"],
        vec!["chartab", "--q", "2"],
    ] {
        let out = run(dir.path(), &args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["euler", "-g", "0", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("UnsupportedGenusZero"));
    let out = run(dir.path(), &["count", "--add", "-g", "0", "--mu", "2;2", "--q", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DivisibleMu"));
}

#[test]
fn chartab_q3() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["chartab", "--q", "3"]);
    assert_eq!(v["group_order"], "48");
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);
    assert_eq!(v["characters"].as_array().unwrap().len(), 8);
    assert_eq!(v["checks"]["orthogonality"], true);
}

#[test]
fn latex_and_text_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["--format", "latex", "epoly", "-g", "1", "--mu", "1"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("\\begin{align*}") && s.contains("\\text{d\\_mu}"));
    let out = run(dir.path(), &["epoly", "-g", "1", "--mu", "1"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("E = q^2 - 2*q + 1"));
}
