//! End-to-end runs of the `qpoly` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn qpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpoly")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "one JSON document per run: {text}");
    serde_json::from_str(&text).unwrap()
}

const IJK: &str = "[[0,1,0,0],[0,0,1,0],[0,0,0,1]]";
const Q_EXPANDED: &str = r#"{"type":"txyz","terms":[
    {"exp":[0,0,0,1],"coeff":[0,0,0,1]},
    {"exp":[0,0,1,0],"coeff":[0,0,1,0]},
    {"exp":[0,1,0,0],"coeff":[0,1,0,0]},
    {"exp":[1,0,0,0],"coeff":[1,0,0,0]}]}"#;

#[test]
fn ijk_is_not_unisolvent() {
    let out = qpoly(&["interp-hz", "--points", IJK, "--values", "[1,2,3]"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["status"], "error");
    assert_eq!(v["reason"], "not-unisolvent");
}

#[test]
fn dims_of_quadratics() {
    let out = qpoly(&["dims", "--kind", "pol", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dim"], 15);
    for (kind, n, dim) in [("hom", 3, 20), ("reg", 2, 6), ("harm", 2, 9), ("pol", 1, 5), ("pol", 0, 1)] {
        let out = qpoly(&["dims", "--kind", kind, "--n", &n.to_string()]);
        assert_eq!(json_of(&out)["dim"], dim, "{kind} {n}");
    }
}

#[test]
fn q_is_harmonic_but_not_regular() {
    let out = qpoly(&["check", "--poly", Q_EXPANDED]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["regular"], false);
    assert_eq!(v["harmonic"], true);

    let formal = qpoly(&["check", "--poly", r#"{"type":"formal","coeffs":[0,1]}"#]);
    let w = json_of(&formal);
    assert_eq!((w["regular"].clone(), w["harmonic"].clone()), (v["regular"].clone(), v["harmonic"].clone()));
}

#[test]
fn interp_hz_recovers_z_squared_plus_one() {
    // z² + 1 vanishes on the whole sphere of unit imaginary quaternions.
    let out = qpoly(&["interp-hz", "--points", "[[0,1,0,0],[0,0,1,0],[2,0,0,0]]", "--values", "[0,0,5]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let coeffs = v["poly"]["coeffs"].as_array().unwrap();
    let expect = [1.0, 0.0, 1.0];
    for (c, e) in coeffs.iter().zip(expect) {
        let c: Vec<f64> = serde_json::from_value(c.clone()).unwrap();
        assert!((c[0] - e).abs() < 1e-12 && c[1..].iter().all(|x| x.abs() < 1e-12), "{c:?}");
    }
}

#[test]
fn annihilator_forms() {
    let out = qpoly(&["annihilator", "--points", "[[0,1,0,0],[0,0,1,0]]", "--form", "sym"]);
    assert_eq!(out.status.code(), Some(0));
    let p = qpoly::Poly::from_value(&json_of(&out)["poly"]).unwrap().into_txyz();
    assert_eq!(p.eval(qpoly_core::Quaternion::ZERO), qpoly_core::Quaternion::ZERO);

    let out = qpoly(&["annihilator", "--points", "[[0,1,0,0],[0,0,1,0]]"]);
    assert_eq!(json_of(&out)["poly"]["type"], "formal");
}

#[test]
fn interp_sym_reports_basis_metadata() {
    let out = qpoly(&[
        "interp-sym",
        "--points",
        "[[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0]]",
        "--values",
        "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]",
        "--choice",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let record = qpoly::BasisRecord::from_value(&v["basis"]).unwrap();
    assert_eq!(record.factor_order, "ascending");
    assert_eq!(record.choice.number(), 2);
    assert_eq!(record.points.len(), 4);
    assert!(v["diagnostics"]["delta_defect"].as_f64().unwrap() < 1e-9);
    assert!(v["diagnostics"]["permutation_defect"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn degenerate_choice_one() {
    // The symmetrized annihilator of {1, i, j, k} vanishes at 0.
    let pts = "[[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]";
    let out = qpoly(&["interp-sym", "--points", pts, "--values", "[1,1,1,1,1]", "--choice", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["reason"], "degenerate-configuration");
}

#[test]
fn basis_kinds() {
    let out = qpoly(&["basis", "--kind", "sudbery", "--n", "2"]);
    let v = json_of(&out);
    assert_eq!(v["polys"].as_array().unwrap().len(), 6);
    assert_eq!(v["indexing"], "corrected");
    let out = qpoly(&["basis", "--kind", "symmetrized", "--n", "3"]);
    assert_eq!(json_of(&out)["polys"].as_array().unwrap().len(), 10);
    let out = qpoly(&["basis", "--kind", "sudbery", "--n", "9"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["reason"], "degree-bound-exceeded");
}

#[test]
fn eval_sides() {
    let poly = r#"{"type":"formal","coeffs":[[0,0,0,0],[0,1,0,0]]}"#;
    let left = json_of(&qpoly(&["eval", "--poly", poly, "--at", "[0,0,1,0]", "--side", "left"]));
    let right = json_of(&qpoly(&["eval", "--poly", poly, "--at", "[0,0,1,0]", "--side", "right"]));
    // j·i = −k, i·j = k
    assert_eq!(left["value"], serde_json::json!([0.0, 0.0, 0.0, -1.0]));
    assert_eq!(right["value"], serde_json::json!([0.0, 0.0, 0.0, 1.0]));
}

#[test]
fn input_errors_exit_three() {
    let dup = qpoly(&["interp-hz", "--points", "[[1,0,0,0],[1,0,0,0]]", "--values", "[1,2]"]);
    assert_eq!(dup.status.code(), Some(3));
    assert_eq!(json_of(&dup)["reason"], "invalid-point-set");

    let short = qpoly(&["interp-hz", "--points", IJK, "--values", "[1]"]);
    assert_eq!(short.status.code(), Some(3));
    assert_eq!(json_of(&short)["reason"], "dimension-mismatch");

    let garbage = qpoly(&["interp-hz", "--points", "[[0,1,0]]", "--values", "[1]"]);
    assert_eq!(garbage.status.code(), Some(3));
    assert_eq!(json_of(&garbage)["reason"], "parse-error");

    let missing = qpoly(&["check", "--poly", "no-such-file.json"]);
    assert_eq!(missing.status.code(), Some(3));
    assert_eq!(json_of(&missing)["reason"], "unreadable-input");

    let usage = qpoly(&["dims", "--kind", "cubic", "--n", "1"]);
    assert_eq!(usage.status.code(), Some(3));
    assert!(!usage.stderr.is_empty());
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("points.json");
    let vals = dir.path().join("values.json");
    std::fs::write(&pts, "[[0,1,0,0],[0,0,1,0],[1,1,0,0]]").unwrap();
    std::fs::write(&vals, "[[1,0,0,0],[0,0,0,1],[2,0,1,0]]").unwrap();
    let out = qpoly(&["interp-hz", "--points", pts.to_str().unwrap(), "--values", vals.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["diagnostics"]["newton"]["max_relative_diff"].as_f64().unwrap() < 1e-10);
}

#[test]
fn output_is_deterministic() {
    let pts = "[[0.3,1,0,0.2],[0,0,1,0],[1,1,0.5,0],[-0.7,0.1,0.4,1.3]]";
    let vals = "[[1,0,0,0],[0,0,0,1],[2,0,1,0],[0,3,0,0]]";
    for args in [
        vec!["interp-sym", "--points", pts, "--values", vals, "--seed", "7"],
        vec!["interp-sym", "--points", pts, "--values", vals, "--choice", "1"],
        vec!["interp-hz", "--points", pts, "--values", vals, "--seed", "3"],
        vec!["basis", "--kind", "symmetrized", "--n", "2"],
    ] {
        let a = qpoly(&args);
        let b = qpoly(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}

#[test]
fn floats_have_seventeen_digits() {
    let out = qpoly(&["eval", "--poly", r#"{"type":"formal","coeffs":[0.1]}"#, "--at", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1.0000000000000001e-1"), "{text}");
}
