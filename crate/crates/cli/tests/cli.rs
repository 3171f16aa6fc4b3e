use std::process::{Command, Output};

use serde_json::Value;

fn typeb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typeb")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = typeb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_string).collect()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn enumeration() {
    assert_eq!(stdout(&["enum", "A", "4", "--count"]).trim(), "14");
    assert_eq!(stdout(&["enum", "B", "2", "--count"]).trim(), "6");
    assert_eq!(lines(&["enum", "A", "1"]), ["{(1)}"]);
    assert_eq!(lines(&["enum", "B", "3"]).len(), 20);
    let json: Value = serde_json::from_str(&stdout(&["--format", "json", "enum", "A", "3"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 5);
    assert_eq!(json[0]["type"], "A");
}

#[test]
fn bounds_are_usage_errors() {
    let out = typeb(&["enum", "A", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1..=8"));
    assert_eq!(typeb(&["enum", "B", "7"]).status.code(), Some(2));
    assert_eq!(stdout(&["--bound", "7", "enum", "B", "7", "--count"]).trim(), "3432");
    assert_eq!(typeb(&["enum", "C", "2"]).status.code(), Some(2));
    assert_eq!(typeb(&["kreweras", "{(1,3),(2,4)}"]).status.code(), Some(2));
}

#[test]
fn partition_commands() {
    assert_eq!(stdout(&["kreweras", "{(1,2),(3,4)}"]).trim(), "{(1),(2,4),(3)}");
    assert_eq!(stdout(&["kreweras", "--left", "{(1),(2,4),(3)}"]).trim(), "{(1,2),(3,4)}");
    let fiber = lines(&["fiber", "{(1,2),(3,4)}"]);
    assert_eq!(fiber.len(), 5);
    for pi in &fiber {
        assert_eq!(stdout(&["abs", pi]).trim(), "{(1,2),(3,4)}");
    }
    assert_eq!(typeb(&["abs", "{(1,2)}"]).status.code(), Some(2));
}

#[test]
fn iota_and_intervals() {
    assert_eq!(stdout(&["iota", "{(1,2),(3,4)}"]).trim(), "(1,2)(3,4)");
    let tau = stdout(&["iota", "{(1,2,-1,-2),(3,4),(-3,-4)}"]);
    assert_eq!(tau.trim(), "(1,2,-1,-2)(3,4)(-3,-4)");
    assert_eq!(
        stdout(&["iota", "--inverse", "--group", "W", "--n", "4", tau.trim()]).trim(),
        "{(1,2,-1,-2),(3,4),(-3,-4)}"
    );
    assert_eq!(stdout(&["iota", "--gamma", "{(1,2)}"]).trim(), "(1,2)(-1,-2)");
    assert_eq!(stdout(&["interval", "--group", "W", "--n", "2", "--top", "omega", "--count"]).trim(), "6");
    assert_eq!(stdout(&["interval", "--group", "S", "--n", "4", "--count"]).trim(), "14");
    assert_eq!(stdout(&["interval", "--group", "W", "--n", "3", "--top", "gamma", "--count"]).trim(), "5");
    let elems = lines(&["interval", "--group", "W", "--n", "2"]);
    assert_eq!(elems.len(), 6);
    for e in &elems {
        let p = stdout(&["iota", "--inverse", "--group", "W", "--n", "2", e]);
        assert_eq!(stdout(&["iota", p.trim()]).trim(), e);
    }
    assert_eq!(typeb(&["iota", "--inverse", "--group", "W", "--n", "2", "(1,-1)(2,-2)"]).status.code(), Some(2));
}

#[test]
fn boxed_convolutions() {
    assert_eq!(stdout(&["boxconv", "A", "[1,1,1]", "[1,1,1]"]).trim(), "[1,2,5]");
    assert_eq!(stdout(&["boxconv", "B", "[[1,0]]", "[[1,0]]"]).trim(), "[[1,0]]");
    assert_eq!(stdout(&["boxconv", "AC", "[[1,1],[0,0]]", "[[1,0],[0,0]]"]).lines().next(), Some("[[1,1],[0,0]]"));
    let checked = stdout(&["boxconv", "AC", "[[1,2],[3,4],[5,6]]", "[[7,8],[9,1],[2,3]]", "--check-5-3"]);
    assert!(checked.contains("check: pass"), "{checked}");
    let checked = stdout(&["boxconv", "B", "[[1,2],[3,4],[5,6]]", "[[7,8],[9,1],[2,3]]", "--check-dual"]);
    assert!(checked.contains("check: pass"), "{checked}");
    assert_eq!(stdout(&["boxconv", "A", "[1,1,1]", "[1,1,1]", "--order", "2"]).trim(), "[1,2]");
    assert_eq!(typeb(&["boxconv", "A", "[1,1]", "[1,1,1]"]).status.code(), Some(2));
    assert_eq!(typeb(&["boxconv", "A", "[1,1", "[1,1]"]).status.code(), Some(2));
    let json: Value = serde_json::from_str(&stdout(&["--format", "json", "boxconv", "A", "[1,1]", "[1,1]"])).unwrap();
    assert_eq!(json["result"], serde_json::json!(["1", "2"]));
}

#[test]
fn cumulants_from_space_files() {
    let moments = data("moments.json");
    assert_eq!(stdout(&["cumulant", "--space", &moments, "a1", "a1"]).trim(), "2");
    assert_eq!(stdout(&["cumulant", "--space", &moments, "a1", "x"]).trim(), "2");
    assert_eq!(stdout(&["cumulant", "--space", &moments, "a1:x", "a2:x"]).trim(), "[1/2,2]");
    assert_eq!(typeb(&["cumulant", "--space", &moments, "a1", "a1", "a1"]).status.code(), Some(2));
    let pairs = data("pairs.json");
    let out = stdout(&["cumulant", "--space", &pairs, "--transform", "a_g1:x_g1"]);
    assert!(out.contains("R = [[1,1],[0,0],[0,0],[0,0]]"), "{out}");
    assert_eq!(stdout(&["cumulant", "--space", &pairs, "a_g1:x_g1", "a_g2:x_g2"]).trim(), "[0,0]");
    assert_eq!(typeb(&["cumulant", "--space", "/nonexistent.json", "a"]).status.code(), Some(2));
}

#[test]
fn verification() {
    let out = stdout(&["verify", "abs-cover", "--n", "5"]);
    assert!(out.starts_with("pass") && out.contains("fibers all size 6"), "{out}");
    assert!(stdout(&["verify", "bridge", "--n", "3", "--samples", "20", "--seed", "7"]).starts_with("pass"));
    assert!(stdout(&["verify", "theorem-7-3", "--order", "5", "--seed", "1"]).starts_with("pass"));
    let unknown = typeb(&["verify", "no-such-property"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("abs-cover"));
    assert!(stdout(&["verify", "--list"]).contains("bridge-negative"));
    let json = |seed: &str| {
        let mut v: Value =
            serde_json::from_str(&stdout(&["--format", "json", "verify", "bridge", "--samples", "3", "--seed", seed]))
                .unwrap();
        v["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(json("5"), json("5"));
    assert_eq!(json("5")["passed"], true);
}
