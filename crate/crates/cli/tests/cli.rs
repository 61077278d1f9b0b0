use std::path::PathBuf;
use std::process::{Command, Output};

use causal_algebra::{BasisLetter, Word};
use causal_cli::commands::load_model;
use causal_cli::to_oracle;
use causal_oracle::state_kernel_bruteforce;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_causal-kernel"));
    c.env_remove("CAUSAL_KERNEL_LOG");
    c
}

fn models_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

fn model(name: &str) -> String {
    models_dir().join(format!("{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Writes `text` to a scratch file and returns its path.
fn scratch(name: &str, text: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn edited(name: &str, from: &str, to: &str, out: &str) -> String {
    let text = std::fs::read_to_string(model(name)).unwrap();
    assert!(text.contains(from), "{from:?} not in {name}");
    scratch(out, &text.replacen(from, to, 1))
}

#[test]
fn eval_of_the_unit_is_one() {
    // ψ = |0⟩ exactly
    let o = run(&["eval", "--model", &model("sequential"), "--b", "I", "--a", "I"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout), "{\"re\":1.0,\"im\":0.0}\n");
    for m in ["switch", "fuzz", "superspacetime"] {
        let v = stdout_json(&run(&["eval", "--model", &model(m), "--b", "I", "--a", "I"]));
        assert!((v["re"].as_f64().unwrap() - 1.0).abs() < 1e-12, "{m}: {v}");
        assert!(v["im"].as_f64().unwrap().abs() < 1e-12, "{m}: {v}");
    }
}

#[test]
fn eval_matches_the_oracle() {
    let path = model("sequential");
    let loaded = load_model(path.as_ref()).unwrap();
    // x and y are the first basis letters, σx, of each slot
    let w = Word::new(vec![BasisLetter::new(1, 0), BasisLetter::new(2, 0)]);
    let expect = state_kernel_bruteforce(&to_oracle(&loaded.model), &Word::empty(), &w).unwrap();
    for (b, a) in [("I", "x*y"), ("adj(x)", "y"), ("2*I - I", "x1*y1")] {
        let v = stdout_json(&run(&["eval", "--model", &path, "--b", b, "--a", a]));
        let got = causal_core::C64::new(v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap());
        assert!((got - expect).norm() < 1e-10, "{b} / {a}: {got} vs {expect}");
    }
}

#[test]
fn eval_formats() {
    let m = model("sequential");
    let csv = run(&["eval", "--model", &m, "--b", "I", "--a", "I", "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&csv.stdout), "re,im\n1,0\n");
    let pretty = run(&["eval", "--model", &m, "--b", "I", "--a", "I", "--format", "pretty"]);
    assert!(String::from_utf8_lossy(&pretty.stdout).starts_with("ω(b, a) = 1."));
}

#[test]
fn expression_errors_exit_with_2() {
    let m = model("sequential");
    let o = run(&["eval", "--model", &m, "--b", "I", "--a", "z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unbound symbol z"), "{}", stderr(&o));

    let o = run(&["eval", "--model", &m, "--b", "I", "--a", "x*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1:3:"), "{}", stderr(&o));

    let o = run(&["verify", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--model", &m]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_models_exit_with_3() {
    // the link's (0,0) entry cos(0.2) becomes 2
    let bad = edited("sequential", "0.9800665778412416", "2.0", "nonunitary.json");
    let o = run(&["eval", "--model", &bad, "--b", "I", "--a", "I"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("invalid model"), "{}", stderr(&o));
    assert_eq!(run(&["verify", "--model", &bad]).status.code(), Some(3));

    let v2 = edited("switch", "\"version\": 1", "\"version\": 7", "v7.json");
    assert_eq!(run(&["eval", "--model", &v2, "--b", "I", "--a", "I"]).status.code(), Some(3));
    let missing = models_dir().join("missing.json").display().to_string();
    assert_eq!(run(&["gns", "--model", &missing]).status.code(), Some(3));
}

#[test]
fn dimension_mismatches_exit_with_4() {
    let short = edited("sequential", "\"psi\": [\n    [\n      1,\n      0\n    ],", "\"psi\": [", "short_psi.json");
    let o = run(&["eval", "--model", &short, "--b", "I", "--a", "I"]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));

    // a 2×2 symbol bound to the 4-dimensional slot u
    let text = std::fs::read_to_string(model("switch")).unwrap();
    let mut cfg: Value = serde_json::from_str(&text).unwrap();
    cfg["symbols"] = serde_json::json!({"h": {"slot": "u", "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}});
    let p = scratch("bad_symbol.json", &cfg.to_string());
    assert_eq!(run(&["eval", "--model", &p, "--b", "I", "--a", "h"]).status.code(), Some(4));
}

#[test]
fn verify_is_deterministic_and_passes_on_builtins() {
    let a = run(&["verify", "--seed", "7"]);
    let b = run(&["verify", "--seed", "7"]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["pass"], Value::Bool(true));
    assert_eq!(report["models"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_fails_with_1_when_a_tolerance_is_impossible() {
    let o = run(&["verify", "--model", &model("superspacetime"), "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("verification failed"));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["pass"], Value::Bool(false));
}

#[test]
fn gram_outputs() {
    let m = model("sequential");
    let csv = run(&["gram", "--model", &m, "--max-len", "1", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("word,e,"));
    assert!(lines[1].starts_with("e,1+0i,") || lines[1].starts_with("e,1.0000000000000002+0i,"));

    let serial = run(&["gram", "--model", &model("switch"), "--max-len", "1"]);
    let parallel = run(&["gram", "--model", &model("switch"), "--max-len", "1", "--jobs", "3"]);
    assert_eq!(serial.stdout, parallel.stdout);
    let g = stdout_json(&serial);
    assert_eq!(g["words"].as_array().unwrap().len(), 37);
}

#[test]
fn gns_reports() {
    let r = stdout_json(&run(&["gns", "--model", &model("sequential"), "--max-len", "2"]));
    for key in ["basisSize", "nullRank", "minEigenvalue", "leftIdealMaxViolation", "reconstructionMaxError"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["basisSize"], 25);
    assert!(r["leftIdealMaxViolation"].as_f64().unwrap() > 1e-8);
    assert!(r["reconstructionMaxError"].is_null());

    let one_slot = r#"{"version": 1, "family": "sequential", "dims": {"target": 2},
                      "psi": [[0.6, 0], [0, 0.8]]}"#;
    let p = scratch("one_slot.json", one_slot);
    let r = stdout_json(&run(&["gns", "--model", &p]));
    assert!(r["leftIdealMaxViolation"].as_f64().unwrap() <= 1e-8);
    assert!(r["reconstructionMaxError"].as_f64().unwrap() <= 1e-7);
}

#[test]
fn demos_agree_with_their_references() {
    let s = stdout_json(&run(&["demo-switch"]));
    assert_eq!(s["rows"].as_array().unwrap().len(), 3);
    assert!(s["linearityError"].as_f64().unwrap() < 1e-10);
    assert!(s["oracleError"].as_f64().unwrap() < 1e-10);
    assert!(s["rows"][2]["oracleAmplitude"].is_null());

    let f = stdout_json(&run(&["demo-fuzz"]));
    assert!(f["reductionError"].as_f64().unwrap() < 1e-12);
    assert_eq!(f["rows"][0]["fuzz"], s["rows"][0]["amplitude"]);

    let pretty = run(&["demo-switch", "--format", "pretty"]);
    assert!(String::from_utf8_lossy(&pretty.stdout).contains("branch linearity error"));
}

#[test]
fn log_output_goes_to_stderr() {
    let o = bin()
        .env("CAUSAL_KERNEL_LOG", "info")
        .args(["eval", "--model", &model("sequential"), "--b", "I", "--a", "I"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&o.stdout), "{\"re\":1.0,\"im\":0.0}\n");
    assert!(stderr(&o).contains("loaded sequential model"));
}
