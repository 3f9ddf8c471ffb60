use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poincare"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_passes_on_the_corpus() {
    for name in ["two_three", "three_four_five", "three_five", "torsion", "plane"] {
        let path = fixture(&format!("{name}.json"));
        let out = run(&["verify", "--input", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let report = json(&out);
        let checks = report["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["passed"] == Value::Bool(true)), "{name}");
    }
}

#[test]
fn poincare_numerator_of_two_three() {
    let out = run(&[
        "poincare",
        "--input",
        fixture("two_three.json").to_str().unwrap(),
        "--set",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["methods_agree"], Value::Bool(true));
    assert_eq!(v["saturated"], Value::Bool(true));
    let terms: Vec<(i64, i64)> = v["numerator"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["exp"][0].as_i64().unwrap(), t["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(terms, vec![(0, 1), (3, 1)]);
}

#[test]
fn exit_codes() {
    let ok = run(&["validate", "--input", fixture("two_three.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    assert_eq!(run(&["validate", "--bogus"]).status.code(), Some(1));
    assert_eq!(
        run(&["validate", "--input", "/nonexistent/file.json"]).status.code(),
        Some(1)
    );

    let neg = run(&["validate", "--input", fixture("not_positive.json").to_str().unwrap()]);
    assert_eq!(neg.status.code(), Some(2));
    assert!(!neg.stderr.is_empty());

    let gen = run(&[
        "betti",
        "--input",
        fixture("three_four_five.json").to_str().unwrap(),
        "--set",
        "0,1",
    ]);
    assert_eq!(gen.status.code(), Some(2));

    let budget = run(&[
        "poincare",
        "--input",
        fixture("three_four_five.json").to_str().unwrap(),
        "--budget",
        "5",
    ]);
    assert_eq!(budget.status.code(), Some(4));
}

#[test]
fn realize_then_poincare() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "realize",
        "--input",
        fixture("two_points.json").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let pres = dir.path().join("presentation.json");
    assert!(dir.path().join("realize.json").exists());

    let out = run(&["poincare", "--input", pres.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["methods_agree"], Value::Bool(true));
    let numerator = v["numerator"].as_array().unwrap();
    assert_eq!(numerator.len(), 2);
    assert_eq!(numerator[1]["exp"], serde_json::json!([1, 1, 1]));
    assert_eq!(numerator[1]["coeff"], -1);
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.toml");
    std::fs::write(
        &cfg,
        format!(
            "command = \"betti\"\ninput = {:?}\nbound = 20\ncharacteristics = [0]\n",
            fixture("three_four_five.json").to_str().unwrap()
        ),
    )
    .unwrap();
    let out = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bound"], 20);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);

    let out = run(&["--config", cfg.to_str().unwrap(), "--char", "0,2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("char 0") && text.contains("char 2"));
}

#[test]
fn out_directory_receives_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "betti",
        "--input",
        fixture("three_four_five.json").to_str().unwrap(),
        "--char",
        "0,2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    for f in ["betti.json", "betti_0.csv", "betti_2.csv"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let csv = std::fs::read_to_string(dir.path().join("betti_0.csv")).unwrap();
    assert!(csv.starts_with("j,shifted_j,exponent,degree,value"));
}

#[test]
fn output_is_independent_of_worker_count() {
    for (cmd, name) in [
        ("verify", "three_four_five.json"),
        ("betti", "plane.json"),
        ("colored", "three_four_five.json"),
    ] {
        let path = fixture(name);
        let outputs: Vec<Vec<u8>> = ["1", "4", "8"]
            .iter()
            .map(|j| {
                let out = run(&[cmd, "--input", path.to_str().unwrap(), "--jobs", j]);
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert_eq!(outputs[0], outputs[1], "{cmd} {name}");
        assert_eq!(outputs[0], outputs[2], "{cmd} {name}");
    }
}
