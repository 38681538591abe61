//! CLI acceptance: criterion 10 (bit-identical replay of every seeded
//! command on one platform) and the exit-status contract
//! (0 pass / 1 violation / 2 usage / 3 degenerate input).

use std::process::{Command, Output};

fn altineq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altineq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

/// Report text with the manifest timestamp line removed; everything else
/// must replay bit-identically.
fn strip_timestamp(report: &str) -> String {
    report
        .lines()
        .filter(|line| !line.contains("\"timestamp\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_10_seeded_commands_replay_bit_identically() {
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "verify",
            "--functional",
            "minkowski_alt",
            "--trials",
            "3000",
            "--p",
            "2",
            "--seed",
            "11",
        ],
        vec![
            "verify",
            "--functional",
            "cauchy",
            "--trials",
            "1000",
            "--seed",
            "12",
        ],
        vec![
            "search",
            "--functional",
            "reverse_minkowski",
            "--p",
            "2",
            "--n",
            "5",
            "--restarts",
            "6",
            "--seed",
            "13",
        ],
        vec![
            "sharpness",
            "--family",
            "minkowski_eps_b",
            "--p",
            "2",
            "--grid",
            "10,100,1000",
        ],
        vec!["series", "--mode", "f_scan", "--grid", "0.25:1.5:0.25", "--p", "2"],
        vec!["series", "--mode", "eta", "--s", "0.5"],
        vec!["constants", "--box", "1,2,1,2", "--p", "3/2"],
    ];
    for args in commands {
        let first = altineq(&args);
        let second = altineq(&args);
        assert!(
            first.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        let a = strip_timestamp(&stdout_str(&first));
        let b = strip_timestamp(&stdout_str(&second));
        assert_eq!(a, b, "replay of {args:?} differed");
    }
    println!("ACCEPTANCE 10: PASS — seeded commands replay bit-identically (modulo manifest timestamp)");
}

#[test]
fn criterion_10_thread_count_does_not_change_payloads() {
    let args = [
        "verify",
        "--functional",
        "holder",
        "--trials",
        "4000",
        "--seed",
        "21",
    ];
    let single = Command::new(env!("CARGO_BIN_EXE_altineq"))
        .args(args)
        .env("ALTINEQ_THREADS", "1")
        .output()
        .expect("binary runs");
    let many = Command::new(env!("CARGO_BIN_EXE_altineq"))
        .args(args)
        .env("ALTINEQ_THREADS", "8")
        .output()
        .expect("binary runs");
    assert_eq!(
        strip_timestamp(&stdout_str(&single)),
        strip_timestamp(&stdout_str(&many)),
        "worker count changed a seeded payload"
    );
    println!("ACCEPTANCE 10: PASS — ALTINEQ_THREADS does not affect payloads");
}

#[test]
fn exit_status_contract() {
    // 0: checks pass.
    let ok = altineq(&[
        "verify",
        "--functional",
        "lemma",
        "--trials",
        "500",
        "--seed",
        "3",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // 0 with a vacuous campaign.
    let vacuous = altineq(&["verify", "--functional", "holder", "--trials", "0"]);
    assert_eq!(vacuous.status.code(), Some(0));

    // 1: a mathematical violation. With tolerance forced to zero, the p = 1
    // Minkowski collapse (ratio = 1 up to rounding against bound 1) yields
    // slacks a few ulps below zero, exercising the violation path.
    let violation = altineq(&[
        "verify",
        "--functional",
        "minkowski_alt",
        "--trials",
        "300",
        "--p",
        "1",
        "--seed",
        "5",
        "--tol",
        "0",
    ]);
    assert_eq!(violation.status.code(), Some(1));
    let body = stdout_str(&violation);
    assert!(body.contains("\"worst_instance\""));

    // 2: usage errors.
    let usage = altineq(&["verify", "--functional", "no_such_functional"]);
    assert_eq!(usage.status.code(), Some(2));
    let usage = altineq(&["constants"]);
    assert_eq!(usage.status.code(), Some(2));
    let usage = altineq(&["series", "--mode", "eta"]);
    assert_eq!(usage.status.code(), Some(2));
    let clap_usage = altineq(&["no-such-subcommand"]);
    assert_eq!(clap_usage.status.code(), Some(2));

    // 3: degenerate input surfaced at top level.
    let degenerate = altineq(&["constants", "--box", "0,1,1,2", "--p", "2"]);
    assert_eq!(degenerate.status.code(), Some(3));
    let pole = altineq(&["series", "--mode", "zeta", "--s", "1"]);
    assert_eq!(pole.status.code(), Some(3));
    let neg = altineq(&["series", "--mode", "eta", "--s", "-1"]);
    assert_eq!(neg.status.code(), Some(3));

    println!("ACCEPTANCE 10: PASS — exit statuses 0/1/2/3 follow the contract");
}
