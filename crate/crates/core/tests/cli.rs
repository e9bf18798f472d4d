use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn lkrep_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lkrep"));
    cmd.args(args).env_remove("LKREP_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn lkrep(args: &[&str]) -> Run {
    lkrep_env(args, &[])
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lkrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn roots() {
    let r = lkrep(&["roots", "--type", "A", "--rank", "3"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["count"], 6);
    assert_eq!(v["roots"][5]["root"], "1,1,1");
    assert!(r.stderr.contains("mesh census"));

    let v = lkrep(&["roots", "--type", "Atilde", "--rank", "2", "--depth", "6"]).json();
    assert_eq!(v["delta"], "1,1,1");
    let last = v["roots"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["depth"], 6);
    assert!(last["delta_level"].as_i64().unwrap() >= 1);

    assert_eq!(lkrep(&["roots", "--type", "A", "--rank", "0"]).code, 1);
    assert_eq!(lkrep(&["roots", "--type", "Atilde", "--rank", "2"]).code, 1);
}

#[test]
fn graph_file_input() {
    let m = tmp("a3.json", r#"{"n": 3, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}"#);
    let v = lkrep(&["roots", "--graph", m.to_str().unwrap()]).json();
    assert_eq!(v["count"], 6);
    let named = tmp("d4.json", r#"{"type": "D", "rank": 4}"#);
    assert_eq!(lkrep(&["roots", "--graph", named.to_str().unwrap()]).json()["count"], 12);
    let bad = tmp("bad.json", r#"{"n": 2, "m": [[1, 4], [4, 1]]}"#);
    assert_eq!(lkrep(&["roots", "--graph", bad.to_str().unwrap()]).code, 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["family", "--type", "D", "--rank", "4", "--pqr", "1,1,0"];
    assert_eq!(lkrep(&args).stdout, lkrep(&args).stdout);
}

#[test]
fn family_constructions() {
    let r = lkrep(&["family", "--type", "A", "--rank", "3", "--pqr", "1,0,0", "--f", "x*y^2"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["table1"]["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["family"]["values"]["0,1,0,0"], "x*y^2");

    let r = lkrep(&["family", "--type", "Atilde", "--rank", "3", "--construction", "paris", "--depth", "4"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("agree"));

    let seed = tmp("seed.json", r#"["x*y^2", "x", "x*y", "2*x", "x^2", "x*y^-1", "x", "3*x*y"]"#);
    let args = ["family", "--type", "Atilde", "--rank", "2", "--construction", "affine", "--depth", "5"];
    let r = lkrep(&[&args[..], &["--seed", seed.to_str().unwrap()]].concat());
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stderr.contains("seed terms: pass"));

    // An affine seed on a spherical graph is a usage error.
    let r = lkrep(&["family", "--type", "A", "--rank", "2", "--seed", seed.to_str().unwrap()]);
    assert_eq!(r.code, 1);
}

#[test]
fn rep_words() {
    let a = lkrep(&["rep", "--type", "A", "--rank", "2", "--word", "0.1.0"]).json();
    let b = lkrep(&["rep", "--type", "A", "--rank", "2", "--word", "1.0.1"]).json();
    assert_eq!(a["matrix"], b["matrix"]);
    let id = lkrep(&["rep", "--type", "A", "--rank", "2"]).json();
    let cols = id["matrix"]["columns"].as_object().unwrap();
    for (j, col) in cols {
        assert_eq!(col, &serde_json::json!([[j.parse::<usize>().unwrap(), "1"]]));
    }
    let inv = lkrep(&["rep", "--type", "A", "--rank", "2", "--word", "0", "--inverse"]);
    assert_eq!(inv.code, 0);
    assert!(inv.json()["inverse"].as_bool().unwrap());
    assert_eq!(lkrep(&["rep", "--type", "A", "--rank", "2", "--word", "5"]).code, 1);
}

#[test]
fn csv_export() {
    let r = lkrep(&["rep", "--type", "A", "--rank", "2", "--word", "0", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next().unwrap(), r#""","1,0","0,1","1,1""#);
    // A_20 has 210 positive roots.
    let r = lkrep(&["rep", "--type", "A", "--rank", "20", "--word", "0", "--format", "csv"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("200 columns"));
}

#[test]
fn twisted_and_typeb() {
    let r = lkrep(&["twisted", "--ambient", "A", "--rank", "5", "--group", "flip"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("9×9 twisted generators"));
    assert!(r.stderr.contains("closed-form cross-check: pass"));
    let v = r.json();
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert_eq!(lkrep(&["twisted", "--ambient", "D", "--rank", "4", "--group", "flip"]).code, 1);
    let r = lkrep(&["twisted", "--ambient", "D", "--rank", "4", "--group", "0,1,3,2"]);
    assert_eq!(r.code, 0);

    let r = lkrep(&["typeb", "--n", "3", "--k", "1,2,3", "--pqr", "1,0,0"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    for suite in v["suites"].as_array().unwrap() {
        assert!(suite["determinants"].as_array().unwrap().iter().all(|d| d["agree"] == true));
    }
    let r = lkrep(&["typeb", "--n", "3", "--nonequiv"]);
    assert!(r.stderr.contains("non-equivalent: 6(p+q)+2r ≠ 0 check = true"), "{}", r.stderr);
    let r = lkrep(&["typeb", "--n", "3", "--nonequiv", "--pqr", "1,0,-3"]);
    assert!(r.stderr.contains("check = false"));
    assert_eq!(lkrep(&["typeb", "--n", "2"]).code, 1);
}

#[test]
fn faithful() {
    let r = lkrep(&["faithful", "--type", "A", "--rank", "2", "--L", "6"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("zero collisions"));
    let v = r.json();
    assert!(v["elapsed_ms"].is_number());
    assert_eq!(v["config"]["max_len"], 6);

    let r = lkrep(&["faithful", "--twisted", "--ambient", "A", "--rank", "5", "--L", "4"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("zero collisions"));

    let r = lkrep(&["faithful", "--type", "A", "--rank", "2", "--pqr", "0,0,0"]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["refused"], true);
    assert_eq!(lkrep(&["faithful", "--type", "A", "--rank", "2", "--regime", "y>1"]).code, 3);
}

#[test]
fn cap_from_environment() {
    let r = lkrep_env(&["faithful", "--type", "A", "--rank", "2", "--L", "4"], &[("LKREP_CAP", "5")]);
    assert_eq!(r.code, 2);
    let r = lkrep(&["faithful", "--type", "A", "--rank", "2", "--L", "4", "--cap", "5"]);
    assert_eq!(r.code, 2);
}

#[test]
fn usage_and_selftest() {
    assert_eq!(lkrep(&["frobnicate"]).code, 1);
    assert_eq!(lkrep(&["--help"]).code, 0);
    let r = lkrep(&["selftest"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stderr.lines().filter(|l| l.starts_with("PASS")).count(), 7);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("lkrep-cli-out-{}.json", std::process::id()));
    let r = lkrep(&["roots", "--type", "D", "--rank", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("20 positive roots"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 20);
}
