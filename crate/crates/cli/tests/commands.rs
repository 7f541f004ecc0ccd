use clap::Parser;
use serde_json::Value;
use tord_cli::claims::ClaimsReport;
use tord_cli::{run, Cli};

fn call(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("tord").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let code = run(cli, &mut out).unwrap();
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&call(args).1).unwrap()
}

#[test]
fn enumerate_and_rs() {
    let (_, text) = call(&["enumerate", "--n", "4", "--format", "csv"]);
    assert_eq!(text.lines().count(), 10);
    let v = json(&["rs", "[3,5,6,1,2,4]"]);
    assert_eq!(v["p"]["rows"], serde_json::json!([[1, 2, 4], [3, 5, 6]]));
    let back = json(&["rs", "--p", "1,2,4;3,5,6", "--q", "1,2,3;4,5,6"]);
    assert_eq!(back["word"], serde_json::json!([3, 5, 6, 1, 2, 4]));
}

#[test]
fn taquin_and_vogan() {
    let v = json(&["taquin", "1,3,6;2,5;4", "--i", "1", "--j", "4"]);
    assert_eq!(v["shape"], serde_json::json!([2, 1, 1]));
    let v = json(&["vogan", "1,2,4;3,5,6", "--pair", "3,up"]);
    assert_eq!(v["image"]["rows"], serde_json::json!([[1, 2, 3], [4, 5, 6]]));
    let w = json(&["vogan", "[3,5,6,1,2,4]", "--pair", "3,up"]);
    assert_eq!(w["p"]["rows"], serde_json::json!([[1, 2, 3], [4, 5, 6]]));
}

#[test]
fn order_commands_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (_, line) = call(&["--cache-dir", cache, "order", "build", "--n", "6", "--order", "dv"]);
    let s: Value = serde_json::from_str(&line).unwrap();
    assert_eq!((s["pairs"].as_u64(), s["order"].as_str()), (Some(991), Some("dv")));
    assert!(dir.path().join("dv_n6.tord").exists());
    let q = json(&["--cache-dir", cache, "order", "query", "--order", "dv", "1,2,3;4,5,6", "1,2,5;3,6;4"]);
    assert_eq!(q["related"], true);
    let d = json(&["order", "diff", "--n", "6", "--lower", "d", "--upper", "dv"]);
    assert!(!d.as_array().unwrap().is_empty());
    let none = json(&["order", "diff", "--n", "5", "--lower", "d", "--upper", "ch"]);
    assert!(none.as_array().unwrap().is_empty());
    let (_, dot) = call(&["order", "hasse", "--n", "4", "--order", "vch", "--format", "dot"]);
    assert!(dot.starts_with("digraph vch_4"));
    let bin = dir.path().join("ch4.tord");
    call(&["order", "build", "--n", "4", "--order", "ch", "--format", "bin", "--out", bin.to_str().unwrap()]);
    let rel = tord::orders::io::read_relation_file(&bin).unwrap();
    assert_eq!(rel.pair_count(), 39);
}

#[test]
fn spaltenstein_and_kl() {
    let (code, text) = call(&["spaltenstein", "verify", "--n", "4", "--seed", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert!(v[0].get("w_T").is_some());
    let k = json(&["kl", "build", "--n", "4"]);
    assert_eq!(k["elements"], 24);
    let cells = json(&["kl", "cells", "--n", "4"]);
    assert_eq!(cells.as_array().unwrap().len(), 10);
}

#[test]
fn claims_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run_once = |name: &str| {
        let path = dir.path().join(name);
        let (code, _) = call(&["verify-claims", "--max-n", "5", "--out", path.to_str().unwrap()]);
        let mut report: ClaimsReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(code, 0);
        report.timing = tord_cli::claims::Timing { generated_unix: 0, runtime_ms: vec![] };
        serde_json::to_string(&report).unwrap()
    };
    let a = run_once("a.json");
    assert_eq!(a, run_once("b.json"));
    let report: ClaimsReport = serde_json::from_str(&a).unwrap();
    assert_eq!(report.claims.len(), 12);
    assert_eq!(report.claims[0].status, tord_cli::claims::ClaimStatus::Pass);
    assert_eq!(report.claims[4].status, tord_cli::claims::ClaimStatus::Skipped);
}

#[test]
fn probe_reports_without_asserting() {
    let v = json(&["probe", "--n", "5", "--order", "dv"]);
    assert_eq!(v["row_failures"], 0);
    assert!(v["pairs_checked"].as_u64().unwrap() > 0);
}
