use std::process::Command;

use itk::cli::Report;

fn itk(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_itk"))
        .args(args)
        .env_remove("ITK_MAX_DIGITS")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(itk(&["analyze", "C:(2,3)"]).2, 0);
    assert_eq!(itk(&["analyze", "C:(-2,3)"]).2, 0);
    let (_, err, code) = itk(&["analyze", "C:(2,4)"]);
    assert_eq!(code, 2);
    assert!(err.contains("pair 1 not coprime"), "{err}");
    let (_, err, code) = itk(&["analyze", "C:(2,3),(4,2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("pair 2 not coprime"), "{err}");
    assert_eq!(itk(&["tori", "C:(-2,3)"]).2, 1);
    assert_eq!(itk(&["slice", "C:(2,3),(-7,2)"]).2, 1);
    assert_eq!(itk(&["cablings", "C:(-2,3)"]).2, 1);
    assert_eq!(itk(&["tori", "C:(2,3)", "--prefix", "2"]).2, 2);
    assert_eq!(itk(&["--version"]).2, 0);
}

#[test]
fn tori_tsv_is_deterministic() {
    let args = ["tori", "C:(2,3),(7,2),(29,2)", "--kmax", "60", "--format", "tsv"];
    let first = itk(&args).0;
    for _ in 0..3 {
        assert_eq!(itk(&args).0, first);
    }
    assert!(first.lines().all(|l| l.split('\t').count() == 7));
}

#[test]
fn tori_example_rows() {
    let (out, _, code) = itk(&["tori", "C:(2,3)", "--kmax", "2", "--frame", "Cprime"]);
    assert_eq!(code, 0);
    let slopes: Vec<&str> = out.lines().skip(1).map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    assert_eq!(slopes, ["-1/5", "-2/11", "-3/17"]);
}

#[test]
fn json_report_roundtrips() {
    for knot in ["C:(2,3)", "C:(2,3),(7,2)", "C':(2,3),(-5,2),(1,2)", "C:(-2,3),(5,2)", "C:(3,4),(1,2)"] {
        let (out, err, code) = itk(&["analyze", knot, "--kmax", "15", "--format", "json"]);
        assert_eq!(code, 0, "{err}");
        let report: Report = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, out);
        let back: Report = serde_json::from_str(&again).unwrap();
        assert_eq!(back, report);
        // integers are strings
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["invariants"]["rows"][0]["A"].is_string());
    }
}

#[test]
fn frame_flag_changes_display_only() {
    let c = itk(&["analyze", "C:(2,3),(7,2)", "--format", "json"]).0;
    let cp = itk(&["analyze", "C':(2,3),(-5,2)", "--format", "json", "--frame", "Cprime"]).0;
    let mut a: Report = serde_json::from_str(&c).unwrap();
    let b: Report = serde_json::from_str(&cp).unwrap();
    assert_eq!(a.invariants, b.invariants);
    assert_eq!(a.tori, b.tori);
    a.metadata.frame = b.metadata.frame;
    assert_eq!(a, b);
}

#[test]
fn slice_order_and_chain() {
    let (out, _, code) = itk(&["slice", "C:(2,3),(7,2)", "--format", "tsv"]);
    assert_eq!(code, 0);
    let pts: Vec<String> = out.lines().skip(1).map(|l| l.rsplit_once('\t').unwrap().0.to_string()).collect();
    assert_eq!(pts, ["7\t-2", "7\t2", "0\t-9", "0\t9"]);
    let (out, _, _) = itk(&["slice", "C:(2,3)", "--chain", "--format", "tsv"]);
    let pts: Vec<String> = out.lines().skip(1).map(|l| l.rsplit_once('\t').unwrap().0.to_string()).collect();
    assert_eq!(pts, ["1\t0", "0\t-1", "0\t1"]);
}

#[test]
fn digit_cap_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_itk"))
        .args(["analyze", "C:(2,3),(7,2),(29,2),(233,2),(1861,2)", "--format", "tsv"])
        .env("ITK_MAX_DIGITS", "3")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("digits]"), "{text}");
}

#[test]
fn verify_reports_ranges_and_faults() {
    let (out, _, code) = itk(&["verify", "--ranges", "r<=5,q<=4,p<=9,k<=30,n=40", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["config"]["max_r"], 5);
    assert_eq!(v["config"]["max_q"], 4);
    assert_eq!(v["config"]["max_p"], 9);
    let (out, err, code) = itk(&["verify", "--ranges", "n=20,k<=20", "--inject-fault", "chi-sign"]);
    assert_eq!(code, 3);
    assert!(err.contains("chi_closed_formula"), "{err}");
    assert!(out.contains("FAIL chi_closed_formula"));
}
