use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-torsion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(&text).expect("JSON report"))
}

fn frame(n: usize, a: usize) -> String {
    (0..n).map(|i| if i == a { "1" } else { "0" }).collect::<Vec<_>>().join(",")
}

#[test]
fn eval_frame_case_in_four_dimensions() {
    let (u, v, w) = (frame(4, 0), frame(4, 1), frame(4, 2));
    let (code, r) = run_json(&["eval", "--dim", "4", "--torsion", "1,2,3=1", "--u", &u, "--v", &v, "--w", &w]);
    assert_eq!(code, 0);
    let e = &r["evaluation"];
    assert_eq!(e["volume"], "2π^2");
    assert_eq!(e["torsionFunctional"]["display"], "-6i·V(S^3)");
    assert_eq!(e["torsionFunctional"]["exact"]["re"], serde_json::json!([0, 1]));
    assert_eq!(e["torsionFunctional"]["exact"]["im"], serde_json::json!([-6, 1]));
    assert_eq!(e["torsionFunctional"]["exact"]["Vpow"], 1);
    assert_eq!(e["torsionFunctional"]["exactInPi"]["im"], serde_json::json!([-12, 1]));
    assert_eq!(e["torsionFunctional"]["exactInPi"]["piPow"], 2);
    assert_eq!(e["torsionFunctional"]["numeric"]["im"], "-118.435252813072");
    assert_eq!(e["closedForm"]["display"], "-4i·V(S^3)");
    assert_eq!(e["closedForm"]["numeric"]["im"], "-78.9568352087149");
}

#[test]
fn eval_frame_case_in_three_dimensions() {
    let (u, v, w) = (frame(3, 0), frame(3, 1), frame(3, 2));
    let (code, r) = run_json(&["eval", "--dim", "3", "--torsion", "1,2,3=1", "--u", &u, "--v", &v, "--w", &w]);
    assert_eq!(code, 0);
    let e = &r["evaluation"];
    assert_eq!(e["torsionFunctional"]["display"], "-6i·V(S^2)");
    assert_eq!(e["closedForm"]["exactInPi"]["im"], serde_json::json!([-16, 1]));
    assert_eq!(e["closedForm"]["exactInPi"]["piPow"], 1);
}

#[test]
fn eval_without_torsion_is_zero() {
    let (code, r) = run_json(&["eval", "--dim", "4", "--u", "1,2,3,4", "--v", "0,1,0,-1/2", "--w", "3,0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(r["evaluation"]["torsionFunctional"]["display"], "0");
    assert_eq!(r["evaluation"]["torsionFunctional"]["numeric"]["im"], "0");
}

#[test]
fn eval_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(
        &config,
        r#"{"dim": 4,
            "torsion": [{"indices": [1, 2, 4], "value": "3/2"}, {"indices": [2, 3, 4], "value": -1}],
            "u": ["1", "0", "0", "0"], "v": [0, 1, 0, 0], "w": ["0", "0", "0", "1"]}"#,
    )
    .unwrap();
    let (code, r) = run_json(&["eval", "--config", config.to_str().unwrap()]);
    assert_eq!(code, 0);
    // pipeline constant -6i times T_124 = 3/2
    assert_eq!(r["evaluation"]["torsionFunctional"]["display"], "-9i·V(S^3)");
    assert_eq!(r["config"]["torsion"][0]["indices"], serde_json::json!([1, 2, 4]));
}

#[test]
fn malformed_torsion_key_is_a_configuration_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.json");
    std::fs::write(&config, r#"{"dim": 4, "torsion": [{"indices": [1, 1, 2], "value": "1"}]}"#).unwrap();
    let out = run(&["eval", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-increasing index triple [1, 1, 2]"));
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        vec!["verify", "--dims", "9"],
        vec!["examples", "doubled", "--phi", "1+x"],
        vec!["examples", "eym", "--dim", "3"],
        vec!["examples", "suq2", "--q", "1.5"],
        vec!["eval", "--dim", "4", "--u", "1,0,0"],
        vec!["eval", "--dim", "4"],
        vec!["examples", "sphere"],
        vec!["verify", "--config", "/nonexistent/config.json"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn two_dimensions_is_a_vacuous_pass() {
    let (code, r) = run_json(&["verify", "--dims", "2"]);
    assert_eq!(code, 0);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks[0]["detail"].as_str().unwrap().contains("antisymmetric rank-3 tensor vanishes"));
    assert_eq!(r["pass"], true);
}

fn without_timings(path: &Path) -> Value {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    // the output path is echoed and differs between the two runs
    v["config"].as_object_mut().unwrap().remove("out");
    v
}

#[test]
fn reports_are_deterministic_and_list_each_check_once() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let common = ["verify", "--dims", "3", "--trials", "2", "--seed", "4"];
    let out_a = run(&[&common[..], &["--out", a.to_str().unwrap()]].concat());
    let out_b = run(&[&common[..], &["--sequential", "--out", b.to_str().unwrap()]].concat());
    assert_eq!(out_a.status.code(), out_b.status.code());
    let first = without_timings(&a);
    assert_eq!(first, without_timings(&b));
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(raw["timings"]["checks"].as_array().unwrap().len(), 9);

    let names: Vec<&str> = first["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut unique = names.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(names.len(), 9);
    assert_eq!(unique.len(), 9);
}

#[test]
fn pipeline_constant_is_reported_against_the_closed_form() {
    let (code, r) = run_json(&["verify", "--dims", "3", "--trials", "2"]);
    let first = &r["checks"][0];
    assert_eq!(first["exact"], true);
    // the exact pipeline gives 3/2 of the closed-form constant
    assert_eq!(first["passed"], false);
    assert!(first["detail"].as_str().unwrap().contains("computed/expected = 3/2 in every trial"));
    assert_eq!(code, 1);
    let rest = &r["checks"].as_array().unwrap()[1..];
    assert!(rest.iter().all(|c| c["passed"] == true));
}

#[test]
fn doubled_example_prints_four_cases() {
    let (code, r) = run_json(&["examples", "doubled", "--phi", "1+0i", "--dim", "4"]);
    assert_eq!(code, 0);
    let table = r["table"].as_array().unwrap();
    assert_eq!(table.len(), 4);
    assert!(table.iter().all(|row| row["equal"] == true));
    assert_eq!(table[0]["computed"], "0");
    assert_eq!(table[2]["computed"], "0");
    assert_eq!(r["config"]["phi"], "1");
}

#[test]
fn gauge_and_quantum_examples_pass() {
    let out = run(&["examples", "eym", "--N", "3", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS Einstein-Yang-Mills"));
    let (code, r) = run_json(&["examples", "suq2", "--q", "0.5", "--N", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"][0]["exact"], false);
    let (code, _) = run_json(&["examples", "nctorus", "--K", "6"]);
    assert_eq!(code, 0);
}
