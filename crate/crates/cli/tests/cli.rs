use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinfactor"))
        .args(args)
        .env_remove("SPINFACTOR_THREADS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dimension_of_adjoint_a2() {
    let out = run(&["char", "--type", "A2", "--weight", "1,1", "--dim"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "8\n");
}

#[test]
fn denominator_g2_passes() {
    let j = json(&["verify", "denominator", "--type", "G2"]);
    assert_eq!(j["pass"], Value::Bool(true));
}

#[test]
fn folding_factorization_d4_to_g2_passes() {
    assert_eq!(run(&["verify", "theorem1", "--folding", "D4_to_G2"]).status.code(), Some(0));
}

#[test]
fn cartan_matrix_input_matches_builtin() {
    let a = json(&["char", "--cartan", "[[2,-3],[-1,2]]", "--weight", "1,0"]);
    let b = json(&["char", "--type", "G2", "--weight", "1,0"]);
    assert_eq!(a["terms"], b["terms"]);
}

#[test]
fn decompose_adjoint_square_of_a2() {
    let j = json(&["decompose", "--type", "A2", "--weight", "1,1", "--weight", "1,1"]);
    let parts = j["constituents"].as_array().unwrap();
    assert_eq!(parts.len(), 5);
    let total: i64 = parts.iter().map(|p| p[1].as_i64().unwrap()).sum();
    assert_eq!(total, 6);
}

#[test]
fn affine_spin0_reports_level_and_top() {
    let j = json(&["spin0", "--type", "A1", "--weight", "2", "--K", "1"]);
    assert_eq!(j["level"], 2);
    assert_eq!(j["K"], 1);
    assert_eq!(j["top"], serde_json::json!([1]));
    assert_eq!(j["slices"].as_array().unwrap().len(), 2);
}

#[test]
fn principal_restriction() {
    let j = json(&["restrict", "--embedding", "principal_sl2:3", "--weight", "1,1"]);
    let c = &j["constituents"];
    assert_eq!(c, &serde_json::json!([[[4], 1], [[2], 1]]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["char", "--type", "A2"],
        vec!["char", "--type", "Z9", "--weight", "1"],
        vec!["char", "--type", "A2", "--weight", "1,x"],
        vec!["char", "--type", "A2", "--weight", "1,2,3"],
        vec!["char", "--type", "A2", "--weight", "-1,0"],
        vec!["verify", "nonsense", "--type", "A2"],
        vec!["verify", "theorem1", "--folding", "E6_to_F4"],
        vec!["verify", "affine-denominator", "--type", "A3", "--K", "1"],
        vec!["verify", "coprimary", "--type", "A2", "--case", "two_theta_s"],
        vec!["verify", "facts", "--type", "A2"],
        vec!["char", "--type", "A2", "--cartan", "[[2]]", "--weight", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn bad_thread_setting_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_spinfactor"))
        .args(["roots", "--type", "A1"])
        .env("SPINFACTOR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn allow_large_lifts_the_rank_gate() {
    let j = json(&["verify", "affine-denominator", "--type", "A3", "--K", "1", "--allow-large"]);
    assert_eq!(j["pass"], Value::Bool(true));
}

#[test]
fn failed_identity_exits_one_with_report() {
    // the 7-dimensional G2 module is not coprimary
    let out = run(&["verify", "coprimary", "--type", "G2", "--case", "theta_s", "--K", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["pass"], Value::Bool(false));
}
