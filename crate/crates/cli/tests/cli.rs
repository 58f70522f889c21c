use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn braidgt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidgt"))
        .args(args)
        .env_remove("BRAIDGT_PRECISION")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn check_names(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect()
}

#[test]
fn verify_braid_passes() {
    let out = braidgt(&["verify", "braid", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let names = check_names(&v);
    assert!(names.iter().any(|n| n.contains("relations B4")));
    assert!(names.iter().any(|n| n.contains("delta commute B4")));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["anchor"].as_str().is_some_and(|a| !a.is_empty())));
}

#[test]
fn verify_kz_reports_zeta_residuals() {
    let out = braidgt(&["verify", "kz", "--degree", "3", "--precision", "256"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let refs: Vec<&str> = v["checks"].as_array().unwrap().iter().filter_map(|c| c["reference"].as_str()).collect();
    assert!(refs.contains(&"ζ(2)/(2iπ)²") && refs.contains(&"ζ(3)/(2iπ)³"));
    for c in v["checks"].as_array().unwrap() {
        if let Some(r) = c["residual"].as_f64() {
            assert!(r < 1e-50, "{c}");
        }
    }
}

#[test]
fn verify_all_quick_is_ordered_and_deterministic() {
    let a = braidgt(&["verify", "all", "--quick"]);
    let b = braidgt(&["verify", "all", "--quick"]);
    assert_eq!(a.status.code(), Some(0));
    let (va, vb) = (json(&a), json(&b));
    assert_eq!(check_names(&va), check_names(&vb));
    let suites: Vec<String> = check_names(&va).iter().map(|n| n.split('/').next().unwrap().to_string()).collect();
    let mut order = suites.clone();
    order.dedup();
    assert_eq!(order, ["braid", "burau", "rigidity", "gt-relations", "chi", "kz", "cyclo"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(braidgt(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(braidgt(&["verify", "braid", "--bogus"]).status.code(), Some(2));
    assert_eq!(braidgt(&["rigidity", "solve", "--lambda", "1", "--ring", "R"]).status.code(), Some(2));
    assert_eq!(braidgt(&["verify", "braid", "--n", "2"]).status.code(), Some(2));
    assert_eq!(braidgt(&["cyclo", "epsilon", "--ell", "3", "--m", "4"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_braidgt"))
        .args(["verify", "braid"])
        .env("BRAIDGT_PRECISION", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"n": 3, "degree": 3, "precision": 192}"#).unwrap();
    let out = braidgt(&["--config", cfg.to_str().unwrap(), "verify", "burau"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["parameters"]["n"], 3);
    assert_eq!(v["parameters"]["precision"], 192);
    let out = braidgt(&["--config", cfg.to_str().unwrap(), "verify", "burau", "--precision", "128"]);
    assert_eq!(json(&out)["parameters"]["precision"], 128);
    let out = Command::new(env!("CARGO_BIN_EXE_braidgt"))
        .args(["verify", "braid", "--n", "3"])
        .env("BRAIDGT_PRECISION", "320")
        .output()
        .unwrap();
    assert_eq!(json(&out)["parameters"]["precision"], 320);
    std::fs::write(&cfg, r#"{"degre": 3}"#).unwrap();
    assert_eq!(braidgt(&["--config", cfg.to_str().unwrap(), "verify", "braid"]).status.code(), Some(2));
}

fn solve_to_file(dir: &Path, lambda: &str) -> std::path::PathBuf {
    let out = braidgt(&["gt", "solve", "--lambda", lambda, "--degree", "5", "--param", "3=1", "--param", "5=-2"]);
    assert_eq!(out.status.code(), Some(0));
    let path = dir.join("g.json");
    std::fs::write(&path, json(&out)["element"].to_string()).unwrap();
    path
}

#[test]
fn gt_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = solve_to_file(dir.path(), "1");
    let f = g.to_str().unwrap();
    let out = braidgt(&["gt", "check", "--f-file", f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    // the same f with λ = 3 violates (II)
    let out = braidgt(&["gt", "check", "--f-file", f, "--lambda", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = braidgt(&["gt", "act", "--f-file", f, "--n", "4", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["braid_residual"], 0.0);
    let out = braidgt(&["gt", "chi", "--f-file", f, "--d-max", "3", "--precision", "128"]);
    assert_eq!(out.status.code(), Some(0));
    let chi = json(&out)["chi"].as_array().unwrap().clone();
    assert_eq!(chi.len(), 2);
    assert_eq!(chi[0]["d"], 2);
    let out = braidgt(&["gt", "check", "--f-file", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_output_feeds_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("solved.json");
    let p = path.to_str().unwrap();
    let out = braidgt(&["gt", "solve", "--lambda", "1", "--degree", "5", "--param", "3=1", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let out = braidgt(&["gt", "check", "--f-file", p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn chi_closed_form_and_rho() {
    let out = braidgt(&["gt", "chi-closed-form", "--d", "2", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"].as_array().unwrap().len(), 6);
    assert_eq!(v["value"][0], "1e0");
    let out = braidgt(&["gt", "rho", "--lambda", "1", "--f", "x1^3", "--ell", "5", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rho"], "6 mod 5^3");
}

#[test]
fn rigidity_commands() {
    let out = braidgt(&["rigidity", "solve", "--lambda", "2", "--ring", "F7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ring"], "F7");
    assert_eq!(v["branches"].as_array().unwrap().len(), 2);
    let out = braidgt(&["rigidity", "brute", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["agrees"], true);
}

#[test]
fn cyclo_epsilon_output() {
    let out = braidgt(&["cyclo", "epsilon", "--ell", "3", "--n", "1", "--m", "5", "--verify-positive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["epsilon"]["coefficients"], serde_json::json!(["3", "0"]));
    assert_eq!(v["signs"]["totally_positive"], true);
    let out = braidgt(&["cyclo", "epsilon", "--ell", "7", "--n", "2", "--m", "3"]);
    assert_eq!(json(&out)["epsilon"]["coefficients"].as_array().unwrap().len(), 42);
}

#[test]
fn kz_solve_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.json");
    let out = braidgt(&["kz", "solve", "--degree", "3", "--precision", "128", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["series"]["degree"], 3);
    assert_eq!(v["zeta_table"].as_array().unwrap().len(), 5);
    assert_eq!(braidgt(&["kz", "solve", "--degree", "3", "--eps", "0.5"]).status.code(), Some(2));
}
