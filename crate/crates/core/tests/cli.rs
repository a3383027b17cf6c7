use std::path::Path;
use std::process::{Command, Output};

fn kklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kklab")).args(args).output().expect("binary runs")
}

const CIRCLE: &str = r#"{"dims":[0,1],"simplices":{"0":["a"],"1":[{"id":"e","faces":[[[],"a"],[[],"a"]]}]},"basepoint":"a"}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gamma_suite_passes_with_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("gamma.json");
    let out = kklab(&["verify", "--suite", "gamma", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    let records = report["records"].as_array().unwrap();
    let rel = records.iter().find(|r| r["anchor"] == "a1*b1 = 1").expect("sum ring relation reported");
    assert_eq!(rel["status"], "pass");
}

#[test]
fn toeplitz_suite_at_degree_eight() {
    let out = kklab(&["verify", "--suite", "toeplitz", "--degree", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn corrupted_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = write(dir.path(), "bad.json", &CIRCLE[..CIRCLE.len() / 2]);
    let out = kklab(&["verify", "--suite", "power", "--degree", "2", "--input", &truncated]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("input error"));
    let dangling = write(dir.path(), "dangling.json", &CIRCLE.replace(r#"[[],"a"]]"#, r#"[[],"b"]]"#));
    let out = kklab(&["power", "--input", &dangling, "--degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`b`"));
    let missing = dir.path().join("missing.json");
    assert_eq!(kklab(&["subdivide", "--input", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(kklab(&["verify", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(kklab(&["verify", "--window", "8"]).status.code(), Some(2));
    assert_eq!(kklab(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<String> = (0..2).map(|i| dir.path().join(format!("r{}.json", i)).to_str().unwrap().to_string()).collect();
    for p in &paths {
        let out = kklab(&["verify", "--suite", "toeplitz", "--seed", "7", "--json", p]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&paths[0]).unwrap(), std::fs::read(&paths[1]).unwrap());
}

#[test]
fn power_and_subdivide_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "circle.json", CIRCLE);
    let basis = dir.path().join("basis.json");
    let out = kklab(&["power", "--input", &input, "--degree", "3", "--basis", basis.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[1, 0, 1, 1]"));
    let pieces: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&basis).unwrap()).unwrap();
    assert_eq!(pieces.as_array().unwrap().len(), 4);
    let sd = dir.path().join("sd.json");
    let out = kklab(&["subdivide", "--input", &input, "--times", "2", "--out", sd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let k = kklab::simplicial::load_simplicial(&sd).unwrap();
    assert_eq!(k.counts(), vec![4, 4]);
    let out = kklab(&["verify", "--suite", "simplicial", "--input", sd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
