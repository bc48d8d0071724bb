use assert_cmd::Command;
use serde_json::Value;

fn symdual() -> Command {
    Command::cargo_bin("symdual").unwrap()
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let out = symdual().args(args).args(["--format", "json"]).output().unwrap();
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, code)
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn right_transform_of_the_odd_even_example() {
    let (v, code) = json_of(&[
        "seq", "right-transform", "--alpha", "[1,1,3,2,5,3,7,4,9,5]", "--nmax", "5", "--tail-slope", "1/2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["values"]["values"], serde_json::json!([2, 4, 6, 8, 10]));
    assert_eq!(v["caps"]["nmax"], 5);
    assert!(v["version"].is_string());
}

#[test]
fn uncertified_transform_exits_with_2() {
    let (v, code) = json_of(&["seq", "right", "--alpha", "[1,1,3,2,5,3,7,4,9,5]", "--nmax", "5"]);
    assert_eq!(code, 2);
    assert_eq!(v["certified"], false);
    assert_eq!(v["result"]["uncertified_from"], 1);
}

#[test]
fn left_transform_and_class() {
    let (v, code) = json_of(&["seq", "left", "--alpha", "[2,4,6,8,10,12]", "--nmax", "5", "--nondecreasing"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["values"]["values"], serde_json::json!([1, 1, 2, 2, 3]));
    let (v, _) = json_of(&["seq", "class", "--alpha", "[2,3,5,6,8,9]"]);
    assert_eq!(v["result"]["class"], "subadditive");
}

#[test]
fn malformed_sequence_is_invalid_input() {
    symdual().args(["seq", "class", "--alpha", "[1,2,"]).assert().code(1);
}

#[test]
fn points_report_on_coordinate_points() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "pts.json", r#"{"N": 2, "points": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#);
    let (v, code) = json_of(&["points", "report", "--file", &f, "--m-max", "3", "--d-cap", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["reg"], serde_json::json!([2, 4, 6]));
    assert_eq!(v["result"]["alpha"], serde_json::json!([2, 3, 5]));
}

#[test]
fn points_report_cap_exceeded_exits_with_2() {
    let (_, code) = json_of(&[
        "points", "report", "--json", r#"{"N": 2, "points": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
        "--m-max", "3", "--d-cap", "3",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn jets_agree() {
    let (v, code) = json_of(&[
        "points", "jets", "--json", r#"{"N": 2, "points": [["1","2","3"],["1","-1","4"],["2","5","1"]]}"#,
        "--d-max", "5",
    ]);
    assert_eq!(code, 0, "{v}");
    for row in v["result"]["jets"].as_array().unwrap() {
        assert_eq!(row["agree"], true);
    }
}

#[test]
fn symbolic_polyhedron_of_the_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "triangle.json", r#"{"N": 2, "generators": [[1,1,0],[1,0,1],[0,1,1]]}"#);
    let (v, code) = json_of(&["monomial", "sp", "--file", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["invariants"]["waldschmidt"], "3/2");
    let verts = v["result"]["polyhedron"]["vertices"].as_array().unwrap();
    assert!(verts.contains(&serde_json::json!(["1/2", "1/2", "1/2"])), "{verts:?}");
}

#[test]
fn monomial_symbolic_and_closure() {
    let tri = r#"{"N": 2, "generators": [[1,1,0],[1,0,1],[0,1,1]]}"#;
    let (v, _) = json_of(&["monomial", "symbolic", "--json", tri, "--n", "2"]);
    assert!(v["result"]["display"].as_str().unwrap().contains("x0*x1*x2"));
    let (v, _) = json_of(&["monomial", "closure", "--json", tri, "--exponent", "1,1,1", "--n", "1"]);
    assert_eq!(v["result"]["in_integral_closure"], true);
    let (_, code) = json_of(&["monomial", "closure", "--json", tri, "--exponent", "1,1", "--n", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn dc_witness_for_the_non_closed_family() {
    let spec = r#"{"kind": "family", "N": 2, "generators": ["x0^n", "x1"]}"#;
    let (v, code) = json_of(&["filt", "check-dc", "--json", spec, "--n-max", "3", "--d-cap", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["closed"], false);
}

#[test]
fn verify_sec3_passes_and_unknown_tag_fails() {
    let out = symdual().args(["verify", "sec3"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS criterion 12"), "{text}");
    assert!(text.contains("PASS criterion 13"), "{text}");
    assert_eq!(out.status.code(), Some(0));
    symdual().args(["verify", "sec9"]).assert().code(1);
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["points", "nagata", "--r", "4", "--N", "2", "--m-cap", "3", "--d-cap", "12", "--seed", "5", "--format", "json"];
    let a = symdual().args(args).env("SYMDUAL_THREADS", "1").output().unwrap();
    let b = symdual().args(args).env("SYMDUAL_THREADS", "2").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}
