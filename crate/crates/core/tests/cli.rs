//! Command-line behaviour: text output, JSON output and exit codes.

use serde_json::Value;
use std::process::Command;
use subalg::cli::{run_args, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE};

fn run(args: &[&str]) -> subalg::cli::Outcome {
    let mut v = vec!["subalg"];
    v.extend_from_slice(args);
    run_args(v)
}

#[test]
fn charpoly_text() {
    let out = run(&["charpoly", "x^3 - x", "x^2"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.text, "x^2 - 1");
}

#[test]
fn semigroup_text() {
    let out = run(&["semigroup", "3", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.text.contains("gaps 1,2,5"));
    assert!(out.text.contains("genus 3"));
}

#[test]
fn parse_error_exit_code() {
    assert_eq!(run(&["charpoly", "x^3 -", "x^2"]).code, EXIT_PARSE);
    assert_eq!(run(&["no-such-command"]).code, EXIT_PARSE);
    assert_eq!(run(&["derivations", "x^2", "x^3"]).code, EXIT_PARSE);
}

#[test]
fn domain_error_exit_code() {
    assert_eq!(run(&["ln-coeffs", "4"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["semigroup", "2", "4"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["sagbi", "x^2", "x^4"]).code, EXIT_DOMAIN);
}

#[test]
fn flags_after_generators() {
    let out = run(&["sagbi", "x^2", "x^5 + x^4", "--bound", "6", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.text);
    assert_eq!(out.json["type"], serde_json::json!([2, 5]));
    assert_eq!(out.json["linear_basis"].as_array().unwrap().len(), 5);
    let out = run(&["derivations", "x^2", "x^3", "--alpha", "0"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.text);
    assert!(out.text.contains("k_alpha = 2"));
}

#[test]
fn leading_minus_after_separator() {
    let out = run(&["sagbi", "--", "-x^2", "x^3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.text);
    assert!(out.text.contains("codimension 1"));
}

#[test]
fn field_flag() {
    let out = run(&["--field", "t^4 + 1", "spectrum", "x^4", "x^3 - x", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.text);
    assert_eq!(out.json["points"].as_array().unwrap().len(), 6);
    assert_eq!(out.json["clusters"].as_array().unwrap().len(), 3);
}

#[test]
fn kernel_from_file() {
    let dir = std::env::temp_dir().join(format!("subalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("conds.json");
    let conds: Vec<Value> = [1, 2, 5]
        .iter()
        .map(|&o| {
            let l = subalg::conditions::LinearFunctional::derivative_at(o, subalg::arith::rat(0)).unwrap();
            l.to_json()
        })
        .collect();
    std::fs::write(&path, serde_json::to_string(&serde_json::json!({ "conditions": conds })).unwrap()).unwrap();
    let out = run(&["kernel", "--conditions", path.to_str().unwrap(), "--bound", "8"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.text);
    assert!(out.text.starts_with("x^3\nx^4"));
    assert_eq!(out.json["kernel_dim"], serde_json::json!(6));
    std::fs::remove_dir_all(&dir).ok();
}

/// Every JSON-producing command yields an object of the published shape.
#[test]
fn json_schemas() {
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["charpoly", "x^3 - x", "x^2"], vec!["charpoly", "degree"]),
        (vec!["charpoly-multi", "x^12 + 3*x^6", "x^15", "x^10"], vec!["charpoly", "degree", "symmetrized"]),
        (vec!["spectrum", "x^3 - x", "x^2"], vec!["chi", "points", "clusters"]),
        (vec!["sagbi", "x^3", "x^4", "x^5"], vec!["basis", "type", "codimension"]),
        (vec!["semigroup", "3", "4"], vec!["generators", "gaps", "genus", "conductor", "frobenius"]),
        (vec!["member", "x^7 - x", "--algebra", "x^3 - x", "x^2"], vec!["member", "subduction"]),
        (vec!["conditions", "x^3", "x^4"], vec!["conditions"]),
        (vec!["derivations", "x^2", "x^3", "--alpha", "0"], vec!["alpha", "k_alpha", "combo_basis", "verdict"]),
        (vec!["classify", "x^3 - x", "x^2"], vec!["label", "codimension", "type", "parameters", "conditions", "basis"]),
        (vec!["ln-coeffs", "9"], vec!["n", "coefficients"]),
        (vec!["ln-coeffs", "8"], vec!["error", "kind"]),
    ];
    for (args, keys) in cases {
        let mut a = args.clone();
        a.push("--json");
        let out = run(&a);
        let text = serde_json::to_string(&out.json).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        let obj = back.as_object().unwrap_or_else(|| panic!("{args:?}: not an object"));
        for k in keys {
            assert!(obj.contains_key(k), "{args:?}: missing {k} in {text}");
        }
    }
}

#[test]
fn binary_exit_codes_and_json() {
    let bin = env!("CARGO_BIN_EXE_subalg");
    let out = Command::new(bin).args(["charpoly", "x^3 - x", "x^2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "x^2 - 1");
    let out = Command::new(bin).args(["--json", "semigroup", "3", "4"]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["genus"], serde_json::json!(3));
    let out = Command::new(bin).args(["charpoly", "x^", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).env("SUBALG_LOG", "debug").args(["sagbi", "x^2", "x^5 + x^4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
