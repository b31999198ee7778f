use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphcurve")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("graphcurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn validate_reports_violations_with_input_exit() {
    let o = run(&["validate", "--graph", &data("theta10.json")]);
    assert_eq!(code(&o), 0);
    let o = run(&["validate", "--graph", &data("triangle.json"), "--format", "json"]);
    assert_eq!(code(&o), 2);
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(err["error"]["message"].as_str().unwrap().contains("triangle"));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["betti", "--graph", "/nonexistent/graph.json"]);
    assert_eq!(code(&o), 2);
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["exit"], 2);
}

#[test]
fn betti_golden_match_and_mismatch() {
    let graph = data("theta10.json");
    let labeling = data("theta10_labeling.json");
    let golden = data("golden/theta10_curve.json");
    let o = run(&["betti", "--graph", &graph, "--labeling", &labeling, "--golden", &golden]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));

    let text = std::fs::read_to_string(&golden).unwrap().replacen("[1, 2, 26]", "[1, 2, 27]", 1);
    assert_ne!(text, std::fs::read_to_string(&golden).unwrap());
    let bad = scratch("perturbed.json", &text);
    let o = run(&["betti", "--graph", &graph, "--labeling", &labeling, "--golden", &bad]);
    assert_eq!(code(&o), 3);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("beta_{1,2}"), "{out}");
}

#[test]
fn triangle_ideal_fails_its_certificate() {
    let o = run(&["ideal", "--graph", &data("triangle.json")]);
    assert_eq!(code(&o), 2);
    let o = run(&["ideal", "--graph", &data("triangle.json"), "--allow-violations", "--format", "json"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn secant_matches_its_golden() {
    let o = run(&[
        "secant",
        "--graph",
        &data("theta10.json"),
        "--labeling",
        &data("theta10_labeling.json"),
        "--golden",
        &data("golden/theta10_secant.json"),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let graph = data("theta10.json");
    for args in [
        vec!["embed", "--graph", &graph, "--format", "json"],
        vec!["ideal", "--graph", &graph, "--format", "json", "--source", "both"],
        vec!["survey", "--family", "random_valid", "--d", "8", "--g", "1", "--count", "3", "--jobs", "2"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(code(&a), 0, "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
