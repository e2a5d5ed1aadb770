use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awfs-lab")).args(args).output().expect("awfs-lab runs")
}

fn run_json(suite: &str, extra: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let mut args = vec!["run", suite, "--json-out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = lab(&args);
    let v = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    (o.status.code().unwrap(), v)
}

fn statuses(v: &Value) -> Vec<(String, String)> {
    v["checks"].as_array().unwrap().iter().map(|c| (c["id"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string())).collect()
}

#[test]
fn report_schema() {
    let (code, v) = run_json("mates", &["--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "mates");
    assert_eq!(v["seed"], 7);
    assert!(v["versions"]["awfs-core"].is_string());
    for c in v["checks"].as_array().unwrap() {
        assert!(c["id"].is_string() && c["law"].is_string());
        assert!(["pass", "fail", "cap"].contains(&c["status"].as_str().unwrap()));
    }
}

#[test]
fn trough_suite_passes_and_states_the_difference() {
    let (code, v) = run_json("sset-trough", &[]);
    assert_eq!(code, 0);
    let differ = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "sset-trough.differ").unwrap();
    assert_eq!(differ["witness"]["a_end_dim"], 2);
    assert_eq!(differ["witness"]["b_end_dim"], 3);
}

#[test]
fn forced_cap_stops_at_the_first_pushouts() {
    let (code, v) = run_json("cat-folk", &["--cap", "3"]);
    assert_eq!(code, 2);
    assert_eq!(statuses(&v), [("cat-folk.generator-table".to_string(), "cap".to_string())]);
}

#[test]
fn cat_folk_reports_the_coherence_failure() {
    let (code, v) = run_json("cat-folk", &[]);
    assert_eq!(code, 1);
    let failed: Vec<String> = statuses(&v).into_iter().filter(|(_, s)| s == "fail").map(|(id, _)| id).collect();
    assert_eq!(failed, ["cat-folk.coherence", "cat-folk.algebras-liftfuns"]);
}

#[test]
fn tiny_search_budget_is_a_cap() {
    let (code, v) = run_json("sset-cells", &["--cap", "1"]);
    assert_eq!(code, 2);
    assert_eq!(statuses(&v).last().unwrap().1, "cap");
}

#[test]
fn unknown_suite_is_rejected() {
    let o = lab(&["run", "nope"]);
    assert!(!o.status.success());
}

fn drift(dir: &Path) -> (i32, Value) {
    let o = lab(&["diff-goldens", dir.to_str().unwrap()]);
    let text = String::from_utf8(o.stdout).unwrap();
    let last = text.lines().last().unwrap();
    (o.status.code().unwrap(), serde_json::from_str(last).unwrap())
}

#[test]
fn goldens_roundtrip_and_drift() {
    let dir = tempfile::tempdir().unwrap();
    assert!(lab(&["emit-goldens", dir.path().to_str().unwrap()]).status.success());
    for f in ["cat/generator_table.json", "cat/xi_components.json", "sset/anodyne/n1_k0_m1.json", "sset/trough.json"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let (code, v) = drift(dir.path());
    assert_eq!(code, 0);
    assert!(v["drift"].as_array().unwrap().is_empty());

    // one perturbed certificate step
    let cert = dir.path().join("sset/anodyne/n1_k0_m1.json");
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let k = c["steps"][0]["generator"]["k"].as_u64().unwrap();
    c["steps"][0]["generator"]["k"] = (1 - k).into();
    std::fs::write(&cert, serde_json::to_string_pretty(&c).unwrap() + "\n").unwrap();
    let (code, v) = drift(dir.path());
    assert_eq!(code, 1);
    let d = v["drift"].as_array().unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0]["path"], "sset/anodyne/n1_k0_m1.json");
    assert_eq!(d[0]["status"], "changed");

    std::fs::remove_file(dir.path().join("sset/trough.json")).unwrap();
    let (_, v) = drift(dir.path());
    let d = v["drift"].as_array().unwrap();
    assert_eq!(d.len(), 2);
    assert!(d.iter().any(|x| x["path"] == "sset/trough.json" && x["status"] == "missing"));
}
