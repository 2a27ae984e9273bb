use std::path::PathBuf;
use std::process::{Command, Output};

use wbext_cli::record::{AxiomRecord, ClassifyRecord, OutputRecord, ReplayRecord, ScanOutput, VerifyRecord};
use wbext_cli::render;

fn wbext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbext")).args(args).env_remove("WB_EXT_CAPS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (T, i32) {
    let o = wbext(&[args, &["--json"]].concat());
    (serde_json::from_str(&stdout(&o)).unwrap(), code(&o))
}

fn temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wbext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const TYPE3_B3: &[&str] = &["solve", "--type", "3", "--b", "3", "--alpha", "0", "--abar", "0", "--delta", "1", "--dbar", "-4"];

#[test]
fn type2_trivial_class() {
    let (r, c): (OutputRecord, _) = json(&["solve", "--type", "2", "--b", "1", "--alpha", "0", "--gamma", "0", "--delta", "1"]);
    assert_eq!(c, 0);
    assert_eq!(r.ext_dim, 1);
    assert_eq!((r.basis[0].f.as_str(), r.basis[0].h.as_deref()), ("1", Some("1")));
    assert_eq!(r.diagnostics.stabilization, "stable");
}

#[test]
fn type2_with_opposite_weights() {
    let (r, c): (OutputRecord, _) = json(&["solve", "--type", "2", "--b", "3", "--alpha", "1", "--gamma", "-1", "--delta", "1"]);
    assert_eq!((c, r.ext_dim), (0, 1));
    assert_eq!((r.basis[0].f.as_str(), r.basis[0].g.as_str(), r.basis[0].h.as_deref()), ("1", "0", Some("1")));
}

#[test]
fn type3_f_and_g_classes() {
    let (r, c): (OutputRecord, _) =
        json(&["solve", "--type", "3", "--b", "1", "--alpha", "0", "--abar", "0", "--delta", "3", "--dbar", "1"]);
    assert_eq!(c, 0);
    assert_eq!(r.ext_dim, 2);
}

#[test]
fn off_diagonal_type1_vanishes() {
    let (r, c): (OutputRecord, _) = json(&["solve", "--type", "1", "--b", "5", "--alpha", "2", "--gamma", "1", "--delta", "4"]);
    assert_eq!((c, r.ext_dim), (0, 0));
}

#[test]
fn missing_and_irrelevant_weights_are_usage_errors() {
    let o = wbext(&["solve", "--type", "1", "--b", "5", "--alpha", "2", "--delta", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--gamma"), "{}", stderr(&o));
    let o = wbext(&["solve", "--type", "1", "--b", "5", "--alpha", "2", "--gamma", "1", "--delta", "4", "--dbar", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--dbar"));
}

#[test]
fn floats_are_rejected_naming_the_flag() {
    let o = wbext(&["solve", "--type", "1", "--b", "5", "--alpha", "2", "--gamma", "1", "--delta", "0.5"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--delta"), "{}", stderr(&o));
    let o = wbext(&["check-axioms", "--b", "1.5"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--b"));
}

#[test]
fn zero_b_is_rejected() {
    for args in [&["scan", "--b", "0", "--promote", "dbar"][..], &["check-axioms", "--b", "0"]] {
        let o = wbext(args);
        assert_eq!(code(&o), 2);
        assert!(stderr(&o).contains("b must be nonzero"));
    }
}

#[test]
fn caps_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_wbext"))
        .args(TYPE3_B3)
        .arg("--json")
        .env("WB_EXT_CAPS", "8,2,3,8")
        .output()
        .unwrap();
    let r: OutputRecord = serde_json::from_slice(&o.stdout).unwrap();
    let caps = r.problem.caps.unwrap();
    assert_eq!((caps.f, caps.g, caps.h, caps.phi), (8, 2, 3, 8));
    assert_eq!(r.ext_dim, 2);
    let o = Command::new(env!("CARGO_BIN_EXE_wbext")).args(TYPE3_B3).env("WB_EXT_CAPS", "8,2").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn g_scan_finds_the_exceptional_points() {
    let (r, c): (ScanOutput, _) = json(&["scan", "--b", "-2/3", "--sector", "g", "--promote", "dbar"]);
    assert_eq!(c, 0);
    let specials: Vec<(String, String)> =
        r.scans.iter().flat_map(|s| &s.specials).map(|x| (x.delta.clone(), x.dbar.clone().unwrap())).collect();
    assert!(specials.contains(&("1".into(), "-1/3".into())), "{specials:?}");
    assert!(specials.contains(&("5/3".into(), "-2/3".into())), "{specials:?}");
}

#[test]
fn g_scan_on_one_line() {
    let (r, c): (ScanOutput, _) = json(&["scan", "--b", "1", "--sector", "g", "--promote", "dbar", "--diff", "2"]);
    assert_eq!(c, 0);
    assert_eq!(r.scans.len(), 1);
    assert_eq!(r.scans[0].generic.ext, 1);
    assert_eq!(r.scans[0].generic_witnesses[0].g, "-l*t + d");
}

#[test]
fn virasoro_quadratic_points() {
    let (r, _): (ScanOutput, _) = json(&["scan", "--virasoro", "--promote", "delta", "--diff", "6"]);
    let quads: Vec<&str> = r.scans[0].factorization.quadratics.iter().map(|q| q.value.as_str()).collect();
    assert!(quads.contains(&"2*t^2 - 14*t + 15"), "{quads:?}");
    assert_eq!(r.scans[0].specials.len(), 2);
}

#[test]
fn replay_tables() {
    for (t, n) in [("theo2", 1), ("lemma-g", 7), ("vir-th4", 11)] {
        let (r, c): (ReplayRecord, _) = json(&["replay", "--table", t]);
        assert_eq!(c, 0, "{t}");
        assert_eq!((r.summary.pass, r.summary.discrepancy, r.summary.fail), (n, 0, 0), "{t}");
    }
}

#[test]
fn replay_all_reports_the_printed_sign_typo() {
    let (r, c): (ReplayRecord, _) = json(&["replay", "--table", "all"]);
    assert_eq!(c, 1);
    assert_eq!((r.summary.discrepancy, r.summary.fail), (1, 0));
    let bad = r.cases.iter().find(|c| c.verdict != "pass").unwrap();
    assert_eq!(bad.id, "theo3-b2-iii");
    assert!(bad.amendments.iter().all(|a| a.check.verifies));
}

#[test]
fn unknown_table_is_a_usage_error() {
    assert_eq!(code(&wbext(&["replay", "--table", "theo9"])), 2);
}

#[test]
fn classify_matches_closed_form() {
    let (r, c): (ClassifyRecord, _) = json(&["classify", "--b", "-2/3"]);
    assert_eq!(c, 0);
    assert_eq!(r.mismatches, Some(vec![]));
    assert!(r.points.iter().any(|p| p.delta == "5/3" && p.dbar == "-2/3" && p.g_dim == 1));
}

#[test]
fn axioms() {
    for args in [
        &["check-axioms", "--b", "2", "--alpha", "0", "--delta", "5"][..],
        &["check-axioms", "--b", "-1"],
        &["check-axioms", "--virasoro", "--gamma", "3"],
    ] {
        let (r, c): (AxiomRecord, _) = json(args);
        assert_eq!(c, 0);
        assert!(r.pass && r.checked > 0 && r.residuals.is_empty());
    }
    assert_eq!(code(&wbext(&["check-axioms", "--b", "2", "--alpha", "0"])), 2);
}

const VERIFY_DOC: &str = r#"{"problem":{"algebra":"w","b":"3","type":3,"alpha":"0","abar":"0","delta":"1","dbar":"-4"},
"basis":[{"f":"d^4*l^2 - 10*d^2*l^4 - 17*d*l^5 - 8*l^6","g":"d^2 + 7/3*d*l + 4/3*l^2"}]}"#;

#[test]
fn verify_accepts_a_valid_witness() {
    let p = temp("ok.json", VERIFY_DOC);
    let (r, c): (VerifyRecord, _) = json(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert!(r.pass);
}

#[test]
fn verify_rejects_a_tampered_witness() {
    let p = temp("bad.json", &VERIFY_DOC.replace("4/3*l^2\"", "4/3*l^2 + l^3\""));
    let (r, c): (VerifyRecord, _) = json(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!(c, 1);
    assert!(!r.pass);
    assert!(!r.witnesses[0].residuals.is_empty());
}

#[test]
fn verify_with_no_witnesses_passes() {
    let doc = VERIFY_DOC.split("\"basis\"").next().unwrap().to_string() + "\"basis\":[]}";
    let p = temp("empty.json", &doc);
    assert_eq!(code(&wbext(&["verify", "--input", p.to_str().unwrap()])), 0);
}

#[test]
fn verify_names_the_malformed_field() {
    let p = temp("float.json", &VERIFY_DOC.replace("\"alpha\":\"0\"", "\"alpha\":\"0.5\""));
    let o = wbext(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("problem.alpha"), "{}", stderr(&o));
    let p = temp("h.json", &VERIFY_DOC.replace("\"g\":", "\"h\":\"1\",\"g\":"));
    let o = wbext(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("basis[0].h"), "{}", stderr(&o));
}

#[test]
fn solve_output_verifies() {
    let p = temp("solve.json", "");
    let o = wbext(&[TYPE3_B3, &["--json", "--out", p.to_str().unwrap()]].concat());
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let (r, c): (VerifyRecord, _) = json(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!((c, r.witnesses.len(), r.pass), (0, 2, true));
}

#[test]
fn quadratic_weights_verify() {
    let (r, _): (ScanOutput, _) = json(&["scan", "--virasoro", "--promote", "delta", "--diff", "6"]);
    let x = &r.scans[0].specials[0];
    let doc = serde_json::json!({
        "problem": {"algebra": "virasoro", "type": 3, "alpha": "0", "abar": "0", "delta": x.delta, "dbar": x.dbar},
        "basis": x.witnesses,
    });
    let p = temp("quad.json", &doc.to_string());
    let (v, c): (VerifyRecord, _) = json(&["verify", "--input", p.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert!(v.pass);
}

/// Parse the JSON output, re-render it, and compare with the table output.
fn same_data<T: serde::de::DeserializeOwned>(args: &[&str], table: impl Fn(&T) -> String) {
    let (rec, _): (T, _) = json(args);
    assert_eq!(table(&rec), stdout(&wbext(args)), "{args:?}");
}

#[test]
fn table_and_json_carry_the_same_data() {
    same_data::<OutputRecord>(TYPE3_B3, render::output);
    same_data::<ScanOutput>(&["scan", "--b", "1", "--promote", "dbar", "--diff", "3"], render::scan);
    same_data::<ClassifyRecord>(&["classify", "--virasoro"], render::classify);
    same_data::<ReplayRecord>(&["replay", "--table", "theo3"], render::replay);
    same_data::<AxiomRecord>(&["check-axioms", "--b", "2", "--gamma", "1"], render::axioms);
    let p = temp("same.json", VERIFY_DOC);
    same_data::<VerifyRecord>(&["verify", "--input", p.to_str().unwrap()], render::verify);
}

#[test]
fn output_is_deterministic() {
    for args in [&["classify", "--b", "2"][..], &["replay", "--table", "theo3"], &["scan", "--b", "-2/3", "--promote", "dbar"]] {
        let a = wbext(args);
        let b = wbext(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let a = wbext(&[args, &["--json"]].concat());
        let b = wbext(&[args, &["--json"]].concat());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
