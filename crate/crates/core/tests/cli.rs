use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_apolar-kit"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value, stdout)
}

fn write(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("apolar-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const FERMAT3: &str = r#"{"form":{"nvars":3,"degree":3,"terms":[
  {"exps":[3,0,0],"coeff":"1"},{"exps":[0,3,0],"coeff":"1"},{"exps":[0,0,3],"coeff":"1"}]}}"#;

#[test]
fn scroll_degree_example() {
    let (code, v, _) = run(&["scroll", "--type", "1,1,2", "--class", "2,-2", "--op", "degree"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 6);
}

#[test]
fn numerology_example() {
    let (code, v, _) = run(&["numerology", "--g", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["multiplicities"], serde_json::json!([3, 3, 2, 2]));
    assert_eq!(v["degS"], 6);
}

#[test]
fn verify_a_example_is_deterministic() {
    let args = ["verify-a", "--g", "5", "--trials", "5", "--seed", "1"];
    let (code, v, first) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(v["trials"].as_array().unwrap().len(), 5);
    assert!(v["trials"].as_array().unwrap().iter().all(|t| t["fermat_length"] == 3));
    let (_, _, second) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn every_report_has_a_claim() {
    let f = write("fermat3.json", FERMAT3);
    let commands: Vec<Vec<&str>> = vec![
        vec!["apolar", "--in", &f],
        vec!["inverse", "--in", &f],
        vec!["fermat", "--in", &f, "--seed", "1"],
        vec!["scroll", "--type", "2,3", "--op", "info"],
        vec!["curve-gen", "--g", "5", "--seed", "1"],
        vec!["alpha", "--g", "5", "--seed", "1"],
        vec!["verify-b", "--g", "6", "--trials", "1", "--seed", "1"],
        vec!["numerology", "--g", "8"],
        vec!["nakai", "--k", "2", "--a-max", "10"],
        vec!["gonality-n", "--n", "5", "--k", "2"],
    ];
    for args in commands {
        let (code, v, out) = run(&args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(v["claim"].as_str().is_some_and(|s| !s.is_empty()), "{args:?}");
    }
}

#[test]
fn curve_round_trips_through_alpha() {
    let (code, _, curve) = run(&[
        "curve-gen",
        "--g",
        "6",
        "--gonality",
        "4",
        "--split",
        "0,1",
        "--seed",
        "5",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&curve).unwrap();
    let path = write("curve.json", &v["curve"].to_string());
    let (code, report, out) = run(&["alpha", "--in", &path, "--seed", "6"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(report["alpha"]["hilbert"], serde_json::json!([1, 4, 4, 1]));
    let lengths: Vec<u64> = report["gamma"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["found_length"].as_u64().unwrap())
        .collect();
    assert_eq!(lengths, vec![6, 5]);
}

#[test]
fn exit_codes() {
    let bad = write("bad.json", "{\"form\": 3}");
    assert_eq!(run(&["fermat", "--in", &bad, "--seed", "1"]).0, 2);
    assert_eq!(run(&["fermat", "--in", "/nonexistent/file.json", "--seed", "1"]).0, 2);
    assert_eq!(run(&["verify-b", "--g", "7", "--split", "1,2", "--seed", "1"]).0, 2);
    assert_eq!(run(&["scroll", "--type", "1,1", "--op", "chow", "--class", "1,0"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["fermat", "--in", &bad]).0, 2);
}
