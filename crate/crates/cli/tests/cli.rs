use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetainv")).args(args).env_remove("ZETAINV_DIGITS").output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let o = run(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)));
    (o.status.code().unwrap(), v)
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn starts(v: &Value, prefix: &str) -> bool {
    v.as_str().is_some_and(|s| s.starts_with(prefix))
}

#[test]
fn branch_search_example() {
    let (code, v) = json(&["inverse", "--w", "1.5,1", "--m", "10"]);
    assert_eq!(code, 0);
    for key in ["value", "digits", "m", "elapsed_ms", "warnings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["digits"], 200);
    assert_eq!(v["m"], 10);
    assert_eq!(v["value"]["lambda"], 9);
    assert!(starts(&v["value"]["s"], "1.47592282672357"));
    assert!(v["value"]["residual_log10"].as_f64().unwrap() < -6.0);
}

#[test]
fn limit_formula_inverts_the_basel_sum() {
    let w = "1.644934066848226436472415166646025189218949901206798437735558229370007";
    let (code, v) = json(&["inverse", "--w", w, "--m", "40", "--limit-formula"]);
    assert_eq!(code, 0);
    assert!(starts(&v["value"]["s"], "2.00000000000000000000000000005341514"), "{}", v["value"]);
}

#[test]
fn inputs_in_the_strip_warn() {
    let (code, v) = json(&["inverse", "--w", "0.5", "--m", "10", "--limit-formula"]);
    assert_eq!(code, 0);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["inverse", "--w", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--digits", "0", "zeros", "sinc"]).status.code(), Some(2));
    let (code, v) = json(&["inverse", "--w", "123456789,-987654321", "--m", "10"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "branch_not_found");
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let a = run(&["--digits", "60", "zeros", "sinc", "--n", "2", "--m", "20"]);
    let b = run(&["--digits", "60", "zeros", "sinc", "--n", "2", "--m", "20"]);
    assert_eq!(a.stdout, b.stdout);
    let (_, mut x) = json(&["--digits", "60", "constants", "eta", "--n", "3"]);
    let (_, mut y) = json(&["--digits", "60", "constants", "eta", "--n", "3"]);
    x["elapsed_ms"] = Value::Null;
    y["elapsed_ms"] = Value::Null;
    assert_eq!(x, y);
}

#[test]
fn digits_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_zetainv"))
        .args(["--format", "json", "zeros", "sinc", "--m", "10"])
        .env("ZETAINV_DIGITS", "40")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["digits"], 40);
}

#[test]
fn zeros_commands() {
    let (_, v) = json(&["--digits", "50", "zeros", "sinc", "--n", "1", "--m", "20"]);
    assert!(starts(&v["value"]["root"], "0.99999999999997726263"));
    let (_, v) = json(&["--digits", "60", "zeros", "trivial", "--n", "1", "--m", "20"]);
    assert!(starts(&v["value"]["root"], "-1.9999999999999545252"), "{}", v["value"]);
    let (_, v) = json(&["--digits", "100", "zeros", "bessel", "--m", "60"]);
    assert!(starts(&v["value"][0]["root"], "2.40482555769577276862"), "{}", v["value"]);
}

#[test]
fn attractor_generate_and_verify() {
    let path = tmp("attractor_m4.txt");
    let o = run(&["--digits", "60", "attractor", "generate", "--m", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("0.0251907717128725536"));
    // identities are tuned to order 50, so a small table verifies with warnings
    let (code, v) = json(&["attractor", "verify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], 4);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
    let (code, v) = json(&["attractor", "verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], 50);
    assert!(v["warnings"].as_array().unwrap().is_empty(), "{}", v["warnings"]);
    std::fs::write(&path, "not a table").unwrap();
    assert_ne!(run(&["attractor", "verify", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn error_grid_to_csv() {
    let path = tmp("grid.csv");
    let o = run(&["grid", "error", "--re=-1:1", "--im=-1:1", "--points", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn constants_and_primes() {
    let o = run(&["--digits", "40", "--format", "csv", "constants", "stieltjes", "--n", "2"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("-0.0728158454836767248605863758749"));
    let (_, v) = json(&["--digits", "60", "constants", "keiper-li", "--n", "2"]);
    assert!(v.to_string().contains("0.0230957089661210338"));
    let (_, v) = json(&["--digits", "60", "constants", "stieltjes", "--n", "1", "--method", "determinant", "--k", "32"]);
    assert!(v.to_string().contains("0.577215"));
    let (code, v) = json(&["--digits", "60", "primes", "--count", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], serde_json::json!([2, 3, 5, 7, 11]));
}

#[test]
fn function_inverses() {
    let (code, v) = json(&["--digits", "60", "invert", "lambertw", "--w", "2.718281828459045235360287471352662497757", "--m", "60"]);
    assert_eq!(code, 0);
    assert!(starts(&v["value"]["s"], "0.9999999999999999999999999999999999999999"), "{v}");
    assert_eq!(run(&["invert", "poly", "--w", "2"]).status.code(), Some(2));
    let (code, v) = json(&["--digits", "60", "invert", "poly", "--w", "2", "--coeffs", "0,1,1", "--m", "80"]);
    assert_eq!(code, 0);
    assert!(starts(&v["value"]["s"], "0.99999999999999999999999"), "{v}");
}
