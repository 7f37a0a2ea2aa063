use std::process::{Command, Output};

use serde_json::Value;

fn peaklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peaklab"))
        .args(args)
        .env("PEAKLAB_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn list_checks_covers_every_criterion() {
    let out = peaklab(&["list-checks", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = v.as_array().unwrap();
    let mut criteria: Vec<u64> = checks.iter().map(|c| c["criterion"].as_u64().unwrap()).collect();
    criteria.dedup();
    assert_eq!(criteria, (1..=12).collect::<Vec<_>>());
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"eulerian-b-orthogonality"));
    assert!(ids.contains(&"branching-rule"));
    let text = stdout(&peaklab(&["list-checks"]));
    assert!(text.lines().all(|l| l.contains(" cap ")));
}

#[test]
fn verify_json_round_trips() {
    let dir = std::env::temp_dir().join(format!("peaklab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = peaklab(&[
        "verify", "--check", "peak-vanishing", "--n-min", "1", "--n-max", "4", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let report: peaklab::checks::Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.version, 1);
    assert_eq!(report.records.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v["records"][0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["anchor", "id", "ms", "n", "status", "witness"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic_without_timings() {
    let args = ["verify", "--check", "bigraded-table", "--n-min", "2", "--n-max", "4", "--no-timings"];
    let a = peaklab(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_peaklab"))
        .args(args)
        .env("PEAKLAB_THREADS", "3")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = peaklab(&["verify", "--check", "bigraded-table", "--n-min", "3", "--n-max", "3", "--format", "text"]);
    assert!(stdout(&text).starts_with("bigraded-table n=3 pass"));
}

#[test]
fn failing_record_sets_exit_status() {
    let out = peaklab(&["verify", "--check", "pairing-golden", "--n-min", "10", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rec = &v["records"][0];
    assert_eq!(rec["status"], "fail");
    assert!(!rec["witness"].as_str().unwrap().is_empty());
}

#[test]
fn capped_range_and_bad_input_are_errors() {
    let out = peaklab(&["verify", "--check", "fixed-basis", "--n-min", "1", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside"));
    assert_eq!(peaklab(&["verify", "--check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(peaklab(&["verify", "--check", "peak-family", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn empty_report_is_valid() {
    let report = peaklab::checks::Report::new(Vec::new());
    let text = peaklab::checks::render_report(&report, peaklab::checks::Format::Json);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, serde_json::json!({"version": 1, "records": []}));
    assert!(!report.any_failed());
}

#[test]
fn ring_subcommands() {
    let basis = stdout(&peaklab(&["basis", "--spec", "b-vw", "--n", "2"]));
    assert_eq!(basis.lines().count(), 8);
    assert_eq!(stdout(&peaklab(&["hilb", "--spec", "a-t", "--n", "4"])).trim(), "1 6 11 6");
    let bigraded = stdout(&peaklab(&["hilb", "--spec", "b-vw-gr", "--n", "2", "--bigraded"]));
    assert_eq!(bigraded.trim(), "1 + 2t + 2tq + t^2 + 2t^2q");
    assert_eq!(stdout(&peaklab(&["pairing", "--n", "4", "--monomial", "t12*t23"])).trim(), "v12*w23");
    assert_eq!(peaklab(&["pairing", "--n", "3", "--monomial", "t13*t23"]).status.code(), Some(2));
}

#[test]
fn idempotent_and_character_subcommands() {
    let v: Value = serde_json::from_str(&stdout(&peaklab(&["idem", "--family", "b", "--n", "2"]))).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["group"], "B");
    let grouped: Value =
        serde_json::from_str(&stdout(&peaklab(&["idem", "--family", "a", "--n", "3", "--by-statistic"]))).unwrap();
    // the top element is the average, 1/6 on every descent set
    assert!(grouped[2].as_object().unwrap().values().all(|c| c == "1/6"));
    let chi = stdout(&peaklab(&["char", "--n", "3", "--bidegree", "2,1"]));
    assert_eq!(chi, "(3) 0\n(2,1) -1\n(1,1,1) 3\n");
    let series: Value = serde_json::from_str(&stdout(&peaklab(&["char", "--n", "2", "--series"]))).unwrap();
    assert_eq!(series["1"]["1"]["p"]["2"], "-1/2");
}
