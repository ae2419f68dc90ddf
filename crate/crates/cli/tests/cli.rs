use std::process::{Command, Output};

use serde_json::Value;

fn gz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gz-floer"))
        .args(args)
        .env_remove("GZ_FLOER_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn fiber_over_the_s3_point() {
    let o = gz(&["fiber", "--n", "3", "--point", "0,0,3,0,-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "S^3 x T^2 (Lagrangian)");
}

#[test]
fn solve_is_valid_and_deterministic() {
    let a = gz(&["solve", "--n", "3", "--t", "1/2", "--format", "json"]);
    let b = gz(&["solve", "--n", "3", "--t", "1/2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["valid"], Value::Bool(true));
    assert_eq!(v["trunc"], "6/1");
    assert_eq!(v["residual_valuations"].as_object().unwrap().len(), 5);
}

#[test]
fn zero_t_is_a_usage_error() {
    let o = gz(&["solve", "--t", "0/1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--t"));
    assert_eq!(gz(&["solve", "--n", "3", "--t", "3/2"]).status.code(), Some(2));
    assert_eq!(gz(&["solve", "--n", "3", "--t", "x"]).status.code(), Some(2));
}

#[test]
fn missing_flags_name_the_flag() {
    let o = gz(&["fiber", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--point"));
    let o = gz(&["potential", "--t", "1/2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--n"));
    assert_eq!(gz(&["sweep", "--n", "3", "--ts", ""]).status.code(), Some(2));
}

#[test]
fn truncation_from_environment_and_flag() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_gz-floer"));
        c.args(["solve", "--n", "3", "--t", "1/2", "--format", "json"]).args(extra);
        match env {
            Some(v) => c.env("GZ_FLOER_TRUNC", v),
            None => c.env_remove("GZ_FLOER_TRUNC"),
        };
        json(&c.output().unwrap())
    };
    assert_eq!(run(Some("7/2"), &[])["trunc"], "7/2");
    assert_eq!(run(Some("7/2"), &["--trunc", "4"])["trunc"], "4/1");
    // 3 <= n - 1 + t = 5/2 fails only below 5/2
    let o = gz(&["solve", "--n", "3", "--t", "1/2", "--trunc", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let o = gz(&["solve", "--n", "4", "--t", "1/3", "--format", "json", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let o = gz(&["certify", "--input", p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["valid"], Value::Bool(true));

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let terms = cert["assignment"]["y_{1,3}"]["terms"].as_array_mut().unwrap();
    terms[0]["re"] = Value::String("-1/1".into());
    std::fs::write(&path, serde_json::to_string(&cert).unwrap()).unwrap();
    let o = gz(&["certify", "--input", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID"));

    std::fs::write(&path, "{").unwrap();
    assert_eq!(gz(&["certify", "--input", p]).status.code(), Some(2));
}

#[test]
fn certify_without_input_solves_first() {
    let o = gz(&["certify", "--n", "5", "--t", "1/4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("VALID"));
}

#[test]
fn sweep_over_the_segment() {
    let o = gz(&["sweep", "--n", "3", "--ts", "1/4,1/2,3/4,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let runs = v["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 4);
    assert!(runs.iter().all(|r| r["valid"] == Value::Bool(true)));
    assert_eq!(runs[3]["fiber"], "S^3 x T^2 (Lagrangian)");
    assert_eq!(runs[3]["segment_point"]["u_row"][2], "3/1");
    assert_eq!(gz(&["sweep", "--n", "3", "--ts", "1/2,0"]).status.code(), Some(2));
}

#[test]
fn polytope_and_faces() {
    let v = json(&gz(&["polytope", "--n", "2", "--format", "json"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(v["inequalities"].as_array().unwrap().len(), 6);

    let v = json(&gz(&["polytope", "--n", "3", "--point", "0,2,4,-2,-4", "--format", "json"]));
    assert_eq!(v["contains"], Value::Bool(true));
    let v = json(&gz(&["polytope", "--n", "3", "--point", "0,0,7,0,-3", "--format", "json"]));
    assert_eq!(v["contains"], Value::Bool(false));

    let o = gz(&["faces", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["polytope_faces"], 25);
    assert_eq!(v["correspondence"], Value::Bool(true));
}

#[test]
fn strata_and_potential() {
    let o = gz(&["strata", "--n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dim_m"], 12);
    assert_eq!(v["codimension"], 3);

    let v = json(&gz(&["potential", "--n", "3", "--t", "1/2", "--format", "json"]));
    assert_eq!(v["monomials"].as_array().unwrap().len(), 8);
    assert_eq!(v["exponent_levels"], serde_json::json!(["1/1", "5/2"]));
}

#[test]
fn moment_map_lands_in_the_polytope() {
    let o = gz(&["moment-map", "--p", "1,1,0,0", "--p-under", "1,1,0,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["contains"], Value::Bool(true));
    assert_eq!(v["on_quadric"], Value::Bool(true));
    assert_eq!(v["point"]["u_row"], serde_json::json!(["0/1", "6/1", "6/1"]));
    assert_eq!(gz(&["moment-map", "--n", "4", "--p", "1,1,0,0", "--p-under", "1,1,0,0"]).status.code(), Some(2));
}
