use std::process::Command;

use vstring_cli::{run, TabulationRecord, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn vstring(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vstring").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn single_line(args: &[&str]) -> String {
    let (code, out, err) = vstring(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn compute_reports_u() {
    let (code, out, _) = vstring(&["compute", "ABCACB|aaa"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("u: t^2 - 2t"), "{out}");
    assert!(out.contains("rho: 3"));
    let (_, json, _) = vstring(&["compute", "ABCACB|aaa", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["u_polynomial"], serde_json::json!([[1, -2], [2, 1]]));
    assert_eq!(value["rho"], 3);
}

#[test]
fn word_operations() {
    assert_eq!(single_line(&["cover", "ABCACB|aaa", "-r", "2"]), "AA|a");
    assert_eq!(single_line(&["cover", "ABCDBEDEAC|baaaa", "-r", "2"]), "ABCACB|aaa");
    assert_eq!(single_line(&["compose", "ABAB|aa", "ABAB|aa"]), "ABABCDCD|aaaa");
    assert_eq!(single_line(&["gen", "gamma", "1", "1"]), "ABAB|aa");
    assert_eq!(single_line(&["gen", "alphan", "3"]).len(), "ABCDEF|abc".len());
    let cable = single_line(&["cable", "XYXZYZ|abb", "-n", "2"]);
    assert_eq!(cable.split('|').nth(1).unwrap().len(), 3 * 4 + 1);
    let dotted = single_line(&["rdot", "ABACBC|aab", "-r", "2"]);
    assert_eq!(single_line(&["cover", &dotted, "-r", "2"]), dotted);
    let pre = single_line(&["preimage", "ABAB|aa", "-r", "2"]);
    assert_eq!(single_line(&["cover", &pre, "-r", "2"]), "ABAB|aa");
}

#[test]
fn reduce_and_equiv() {
    let (code, out, _) = vstring(&["reduce", "ABCDEFBADCFE|ababab", "--budget", "states=20000"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("0\n"), "{out}");
    let (_, out, _) = vstring(&["equiv", "0", "ABABCDCD|aaaa"]);
    assert!(out.starts_with("distinct\n"));
    assert!(out.contains("differs"));
    let (_, out, _) = vstring(&["equiv", "ABCBDCAD|aabb", "BACDBCDA|aabb", "--budget", "states=20000"]);
    assert!(out.starts_with("homotopic\n"), "{out}");
    assert!(out.contains("1 homotopy moves"));
}

#[test]
fn exhausted_budget_is_unknown() {
    let (code, out, _) = vstring(&[
        "equiv",
        "ABCDEFBADCFE|ababab",
        "ABAB|ab",
        "--budget",
        "states=2,inc=0",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("unknown\n"), "{out}");
}

#[test]
fn usage_errors() {
    let (code, _, err) = vstring(&["cover", "ABCA|aa", "-r", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot parse"));
    assert_eq!(vstring(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(vstring(&["verify", "no-such-suite"]).0, EXIT_USAGE);
    assert_eq!(vstring(&["reduce", "0", "--budget", "fast"]).0, EXIT_USAGE);
    assert_eq!(vstring(&["preimage", "AA|a", "-r", "1"]).0, EXIT_USAGE);
    let (code, out, _) = vstring(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("tabulate"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["u-cable", "cover-cable-commute", "composite-bm", "rho-bounds", "move-invariance"] {
        let (code, out, _) = vstring(&["verify", suite, "--max-rank", "3", "--samples", "8", "--seed", "11"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains(", 0 failed"), "{out}");
    }
}

#[test]
fn tabulation_is_deterministic_and_rechecks() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.jsonl");
    let second = dir.path().join("b.jsonl");
    for path in [&first, &second] {
        let (code, _, err) = vstring(&["tabulate", "--max-rank", "3", "--out", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
    }
    let text = std::fs::read_to_string(&first).unwrap();
    assert_eq!(text, std::fs::read_to_string(&second).unwrap());
    let records: Vec<TabulationRecord> = text.lines().map(|l| TabulationRecord::from_line(l).unwrap()).collect();
    assert_eq!(records[0].canonical, "0");
    assert!(records.windows(2).all(|w| w[0].rank <= w[1].rank));
    let gamma = records.iter().find(|r| r.covers.get(&2).map(String::as_str) == Some("AA|a"));
    assert!(gamma.is_some());

    let (code, out, _) = vstring(&["recheck", first.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains(&format!("{} records, 0 mismatches", records.len())));

    let tampered = text.replacen("\"rho\":0", "\"rho\":1", 1);
    std::fs::write(&second, tampered).unwrap();
    let (code, out, _) = vstring(&["recheck", second.to_str().unwrap()]);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.contains("line 1"));
}

#[test]
fn graph_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let (code, out, _) = vstring(&["graph", "--max-rank", "3", "-r", "2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("shape ok"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("[label=\"0\"]"));
    assert!(text.contains("[label=\"r=2\"]"));
}

#[test]
fn budget_from_environment() {
    let bin = env!("CARGO_BIN_EXE_vstring");
    let run_with = |budget: &str| {
        Command::new(bin)
            .args(["reduce", "ABCABC|aba"])
            .env("VSTRING_BUDGET", budget)
            .output()
            .unwrap()
    };
    let ok = run_with("states=500,inc=1");
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("budget inc=1,states=500,depth=64"));
    let bad = run_with("warp=9");
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
