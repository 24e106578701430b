use std::path::PathBuf;
use std::process::Command;

use symdyn::cli::Report;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn symdyn(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symdyn")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn admissible_exit_codes() {
    let (code, text) = symdyn(&["admissible", "--sft", &data("golden.json"), "--pattern", &data("p11.json"), "--margin", "0"]);
    assert_eq!(code, 1, "{text}");
    assert!(text.starts_with("CertifiedNo"));
    let (code, _) = symdyn(&["admissible", "--sft", &data("golden.json"), "--pattern", &data("p00.json"), "--margin", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn dist_prints_one() {
    let (code, text) = symdyn(&["dist", "--a", &data("golden.json"), "--b", &data("full.json"), "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "1");
}

#[test]
fn group_info_ball_sizes() {
    let (_, text) = symdyn(&["group-info", "--group", &data("z2.json"), "--n", "2"]);
    assert!(text.contains("n=2: |W_n|=21, |B_n|=13"), "{text}");
    let (_, text) = symdyn(&["group-info", "--group", &data("f2.json"), "--n", "1"]);
    assert!(text.contains("n=1: |W_n|=5, |B_n|=5"), "{text}");
}

#[test]
fn malformed_document_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"type\": \"zd\",\n \"d\": \"two\"}").unwrap();
    let (code, text) = symdyn(&["group-info", "--group", bad.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(text.contains("line 2"), "{text}");
}

#[test]
fn json_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, text) = symdyn(&[
        "language",
        "--sft",
        &data("golden.json"),
        "--n",
        "2",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let printed: Report = serde_json::from_str(&text).unwrap();
    let written: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(printed, written);
    assert_eq!(printed.data["patterns"].as_array().unwrap().len(), 13);
    let again: Report = serde_json::from_str(&serde_json::to_string(&printed).unwrap()).unwrap();
    assert_eq!(again, printed);
}

#[test]
fn certificates_verify_and_tampering_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let cert_s = cert.to_str().unwrap();
    let (code, _) = symdyn(&[
        "admissible",
        "--sft",
        &data("golden.json"),
        "--pattern",
        &data("p11.json"),
        "--cert",
        cert_s,
    ]);
    assert_eq!(code, 1);
    assert_eq!(symdyn(&["verify-cert", cert_s]).0, 0);

    let text = std::fs::read_to_string(&cert).unwrap();
    let pos = text.find("\"margin\": 0").unwrap() + "\"margin\": ".len();
    let mut bytes = text.into_bytes();
    bytes[pos] = b'1';
    std::fs::write(&cert, bytes).unwrap();
    let (code, text) = symdyn(&["verify-cert", cert_s]);
    assert!(code > 2, "{text}");
}

#[test]
fn detector_families() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let (code, _) = symdyn(&[
        "detect-membership",
        "--y",
        &data("full.json"),
        "--rule",
        &data("identity_rule.json"),
        "--x",
        &data("full.json"),
        "--pattern",
        &data("p11.json"),
        "--margin",
        "2",
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(symdyn(&["verify-cert", cert.to_str().unwrap()]).0, 0);
    let (code, _) = symdyn(&[
        "detect-membership",
        "--y",
        &data("full.json"),
        "--rule",
        &data("zero_rule.json"),
        "--x",
        &data("full.json"),
        "--pattern",
        &data("p1.json"),
        "--margin",
        "12",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn uncertified_language_needs_override() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("lang.json");
    let words: Vec<String> = (0..8)
        .map(|v: u32| {
            let vals: Vec<String> = (0..3).map(|i| format!("\"{}\"", (v >> (2 - i)) & 1)).collect();
            format!("{{\"support\": [\"A\", \"\", \"a\"], \"values\": [{}]}}", vals.join(", "))
        })
        .collect();
    std::fs::write(&list, format!("{{\"patterns\": [{}]}}", words.join(", "))).unwrap();
    let base = [
        "detect-membership",
        "--y",
        &data("full.json"),
        "--rule",
        &data("identity_rule.json"),
        "--x",
        &data("full.json"),
        "--pattern",
        &data("p11.json"),
        "--language",
        list.to_str().unwrap(),
    ];
    let (code, text) = symdyn(&base);
    assert_eq!(code, 3);
    assert!(text.contains("unsound override"), "{text}");
    let mut with = base.to_vec();
    with.push("--unsound-override");
    let (code, text) = symdyn(&with);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("UNSOUND"));
}

#[test]
fn group_and_alphabet_mismatches_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = dir.path().join("z2sft.json");
    std::fs::write(&z2, r#"{"group": {"type": "zd", "d": 2}, "alphabet": ["0", "1"], "forbidden": []}"#).unwrap();
    let (code, text) = symdyn(&["dist", "--a", &data("golden.json"), "--b", z2.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(text.contains("group"), "{text}");

    let abc = dir.path().join("abc.json");
    std::fs::write(&abc, r#"{"group": {"type": "zd", "d": 1}, "alphabet": ["a", "b", "c"], "forbidden": []}"#).unwrap();
    let (code, text) = symdyn(&["pullback", "--rule", &data("xor_rule.json"), "--sft", abc.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(text.contains("alphabet"), "{text}");
}

#[test]
fn consistency_and_extraction() {
    let (code, _) = symdyn(&["check-consistency", "--group", &data("z2.json"), "--pattern", &data("inconsistent.json")]);
    assert_eq!(code, 1);
    let (code, _) = symdyn(&["check-consistency", "--group", &data("f2.json"), "--pattern", &data("inconsistent.json")]);
    assert_eq!(code, 0);
    let (code, text) = symdyn(&["extract-point", "--sft", &data("golden.json"), "--n", "4"]);
    assert_eq!(code, 0);
    assert!(text.contains("0 0 0 0 0 0 0 0 0"), "{text}");
    let (code, _) = symdyn(&["extract-point", "--sft", &data("empty.json")]);
    assert_eq!(code, 3);
}

#[test]
fn render_checkerboard() {
    let (code, text) = symdyn(&["render", "--sft", &data("checkerboard.json"), "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim_end(), ". 1 .\n1 0 1\n. 1 .");
}

#[test]
fn rule_and_sft_transformations() {
    let (code, text) = symdyn(&["pullback", "--rule", &data("xor_rule.json"), "--sft", &data("golden.json")]);
    assert_eq!(code, 0);
    let doc: symdyn::document::SftDoc = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(doc.forbidden.len(), 2);
    let (code, text) = symdyn(&["apply-rule", "--rule", &data("xor_rule.json"), "--pattern", &data("p11.json")]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "{ε:0}");
    let (code, _) = symdyn(&[
        "build-yp",
        "--y",
        &data("full.json"),
        "--rule",
        &data("xor_rule.json"),
        "--x",
        &data("golden.json"),
        "--pattern",
        &data("p00.json"),
    ]);
    assert_eq!(code, 0);
    let (code, text) = symdyn(&["lift-free", "--sft", &data("golden.json"), "--fuel", "2"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("stage 2"));
}
