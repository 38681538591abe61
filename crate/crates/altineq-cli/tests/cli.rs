//! Behavioral checks of each subcommand against its contract: report
//! shapes, file outputs, and the documented special cases.

use std::process::{Command, Output};

fn altineq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altineq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn verify_reports_counts_and_manifest() {
    let out = altineq(&[
        "verify",
        "--functional",
        "minkowski_alt",
        "--trials",
        "2000",
        "--p",
        "2",
        "--seed",
        "5",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], "altineq/1");
    assert_eq!(v["manifest"]["command"], "verify");
    assert_eq!(v["manifest"]["seed"], 5);
    assert_eq!(v["payload"]["trials"], 2000);
    assert_eq!(v["payload"]["holds"], 2000);
    assert_eq!(v["payload"]["violations"], 0);
}

#[test]
fn verify_raw_pairs_count_errors_not_violations() {
    let out = altineq(&[
        "verify",
        "--functional",
        "cauchy",
        "--trials",
        "2000",
        "--seed",
        "8",
        "--raw-pairs",
    ]);
    assert!(out.status.success(), "errors are exclusions, not failures");
    let v = json(&out);
    assert!(v["payload"]["errors"].as_u64().unwrap() > 0);
    assert_eq!(v["payload"]["violations"], 0);
}

#[test]
fn constants_box_mode_matches_closed_forms() {
    let out = altineq(&["constants", "--box", "1,2,1,2", "--p", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    let payload = &v["payload"];
    assert_eq!(payload["holder"].as_f64().unwrap(), 4.0);
    assert_eq!(payload["cauchy"].as_f64().unwrap(), 1.25);
    assert_eq!(payload["zhuang"].as_f64().unwrap(), 1.25);
    let mink = payload["minkowski"].as_f64().unwrap();
    assert!((mink - std::f64::consts::SQRT_2).abs() < 1e-15);

    // Point box collapses the Cauchy-type constants to 1.
    let out = altineq(&["constants", "--box", "1,1,1,1", "--p", "2"]);
    let v = json(&out);
    assert_eq!(v["payload"]["cauchy"].as_f64().unwrap(), 1.0);
    assert_eq!(v["payload"]["zhuang"].as_f64().unwrap(), 1.0);
}

#[test]
fn constants_quotient_mode() {
    let out = altineq(&["constants", "--quotient", "1,3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["quotient_constant"].as_f64().unwrap(), 1.25);
    let p_star = v["payload"]["crossover"].as_f64().unwrap();
    assert!((p_star - 1.4747698473569486).abs() < 1e-12);
}

#[test]
fn sharpness_emits_trace_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.csv");
    let out = altineq(&[
        "sharpness",
        "--family",
        "minkowski_eps_b",
        "--p",
        "2",
        "--grid",
        "10,100,1000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["pass"], true);
    assert!(v["payload"]["final_gap"].as_f64().unwrap() < 1e-3);
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("param,ratio,bound,gap"));
    assert_eq!(lines.count(), 3);
    assert!(!csv.contains('\r'), "LF line endings required");
    let outputs = v["manifest"]["outputs"].as_array().unwrap();
    assert_eq!(outputs.len(), 1);
}

#[test]
fn sharpness_flat_trace_at_p_one_passes() {
    let out = altineq(&[
        "sharpness",
        "--family",
        "reverse_minkowski_eps_n",
        "--p",
        "1",
        "--grid",
        "10,100,1000",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["pass"], true);
    for pt in v["payload"]["trace"]["points"].as_array().unwrap() {
        assert!(pt["gap"].as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn sharpness_zero_witness() {
    let out = altineq(&["sharpness", "--family", "holder_zero", "--n", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["report"]["ratio"].as_f64().unwrap(), 0.0);
    assert_eq!(v["payload"]["a"].as_array().unwrap().len(), 4);
    assert_eq!(v["payload"]["pass"], true);
}

#[test]
fn search_single_term_cauchy_is_one() {
    let out = altineq(&[
        "search",
        "--functional",
        "cauchy",
        "--n",
        "1",
        "--restarts",
        "2",
        "--seed",
        "9",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let best = v["payload"]["best_value"].as_f64().unwrap();
    assert!((best - 1.0).abs() < 1e-12);
}

#[test]
fn search_reports_witness_and_bound() {
    let out = altineq(&[
        "search",
        "--functional",
        "minkowski_alt",
        "--p",
        "2",
        "--n",
        "4",
        "--restarts",
        "8",
        "--seed",
        "3",
        "--box-a",
        "0,10",
        "--box-b",
        "0,10",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let p = &v["payload"];
    assert_eq!(p["witness"]["a"].as_array().unwrap().len(), 4);
    assert_eq!(p["witness"]["b"].as_array().unwrap().len(), 4);
    let best = p["best_value"].as_f64().unwrap();
    let bound = p["bound"].as_f64().unwrap();
    assert!(best <= bound + 1e-9);
    assert!(p["evaluations"].as_u64().unwrap() > 0);
}

#[test]
fn series_eta_hits_classical_value() {
    let out = altineq(&["series", "--mode", "eta", "--s", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    let value = v["payload"]["value"].as_f64().unwrap();
    let expect = std::f64::consts::PI.powi(2) / 12.0;
    assert!((value - expect).abs() < 1e-12);
    assert!(v["payload"]["est_error"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn series_f_scan_csv_format_on_stdout() {
    let out = altineq(&[
        "series",
        "--mode",
        "f_scan",
        "--grid",
        "0.25:1:0.25",
        "--p",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let body = String::from_utf8(out.stdout).unwrap();
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("alpha,beta,p,F,slack"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn series_geometric_flags_equality() {
    let out = altineq(&["series", "--mode", "geometric", "--a", "2", "--b", "2", "--p", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["equality"], true);
    assert_eq!(v["payload"]["violations"], 0);
}

#[test]
fn csv_format_rejected_where_not_tabular() {
    let out = altineq(&["constants", "--quotient", "1,3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rational_exponents_parse_exactly() {
    let out = altineq(&["constants", "--box", "1,2,1,2", "--p", "3/2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["payload"]["p"].as_f64().unwrap(), 1.5);
    assert_eq!(v["payload"]["q"].as_f64().unwrap(), 3.0);
}
