use std::fs;
use std::process::Command;

use orderkit::generators::{random_poset, GenSpec};
use orderkit::{canonical_form, is_isomorphic};
use orderkit_cli::posetfile::{emit, parse};
use proptest::prelude::*;

fn orderkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orderkit"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn check_reports_witness() {
    let (code, out, _) = orderkit(&["check", "M3", "--properties", "join_continuous", "--witness"]);
    assert_eq!(code, 1);
    assert!(out.contains("join_continuous  false"), "{out}");
    assert!(out.contains("elements a; subsets {b,c}"), "{out}");

    let (code, out, _) = orderkit(&["check", "chain(3)", "--properties", "prime_continuous"]);
    assert_eq!(code, 0);
    assert!(out.contains("prime_continuous  true"));

    let (code, out, _) = orderkit(&["check", "one-point", "--properties", "all", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 1);
    assert!(v["properties"].as_object().unwrap().values().all(|x| x == true));

    let (code, _, _) = orderkit(&["check", "M3", "--properties", "join_continuous", "--no-assert"]);
    assert_eq!(code, 0);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.poset");
    fs::write(&bad, "elements: a\ncover a a\n").unwrap();
    let (code, _, err) = orderkit(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    assert_eq!(orderkit(&["check", "no-such-thing"]).0, 2);
    assert_eq!(orderkit(&["check", "M3", "--properties", "bogus"]).0, 2);
    assert_eq!(
        orderkit(&["enumerate", "--n", "3", "--filter", "lattice &", "--count"]).0,
        2
    );
    assert_eq!(orderkit(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(orderkit(&["enumerate", "--n", "12", "--count"]).0, 3);
    assert_eq!(
        orderkit(&["check", "boolean(5)", "--properties", "completely_distributive"]).0,
        3
    );
}

#[test]
fn file_input_and_dual() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("two.poset");
    fs::write(&src, "# two incomparable points\nelements: x y\n").unwrap();
    let out = dir.path().join("sigma.poset");
    let (code, _, _) = orderkit(&[
        "dual",
        src.to_str().unwrap(),
        "--scott-opens",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let sigma = parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(sigma.name(), "sigma(two)");
    assert!(is_isomorphic(
        &sigma,
        &orderkit::generators::named("boolean(2)").unwrap()
    ));

    for (input, expect) in [("chain(2)", "chain(3)"), ("one-point", "chain(2)")] {
        for flag in ["--scott-opens", "--scott-closed"] {
            let (code, text, _) = orderkit(&["dual", input, flag]);
            assert_eq!(code, 0);
            let q = parse(&text).unwrap();
            assert!(
                is_isomorphic(&q, &orderkit::generators::named(expect).unwrap()),
                "{input} {flag}"
            );
        }
    }
}

#[test]
fn enumerate_counts_and_emit() {
    for (n, kind, expect) in [("5", "lattices", "5"), ("3", "posets", "5"), ("1", "posets", "1")] {
        let (code, out, _) = orderkit(&["enumerate", "--n", n, "--kind", kind, "--count"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), expect);
    }
    let (_, out, _) = orderkit(&[
        "enumerate",
        "--n",
        "5",
        "--kind",
        "lattices",
        "--filter",
        "!distributive",
        "--count",
    ]);
    assert_eq!(out.trim(), "2");

    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = orderkit(&["enumerate", "--n", "4", "--emit", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 16);
    for f in files {
        let p = parse(&fs::read_to_string(&f).unwrap()).unwrap();
        assert_eq!(p.len(), 4);
    }
}

#[test]
fn verify_reports() {
    let (code, out, _) = orderkit(&["verify", "--suite", "full", "--max-n", "4"]);
    assert_eq!(code, 0, "{out}");

    let (code, out, _) = orderkit(&[
        "verify",
        "--suite",
        "lemma31",
        "--max-n",
        "5",
        "--json",
        "--deterministic",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let suite = &v["suite"][0];
    assert_eq!(suite["instances"], 10);
    assert_eq!(suite["failures"].as_array().unwrap().len(), 0);
    let outside: Vec<&str> = suite["outside_hypothesis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["known_as"].as_str().unwrap())
        .collect();
    assert_eq!(outside, ["M3", "N5"]);
    assert!(suite.get("wall_time_ms").is_none());

    let (code, out, _) = orderkit(&["verify", "--suite", "thm32", "--max-n", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"][0]["instances"], 1);
    assert_eq!(v["suite"][0]["trivialized"], serde_json::json!(["hypercontinuous"]));
}

#[test]
fn export_dot() {
    let (code, out, _) = orderkit(&["export-dot", "chain(2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("rankdir=BT;"));
    assert!(out.contains("  \"a\" -> \"b\";\n"));
    let (_, out, _) = orderkit(&["export-dot", "antichain(2)"]);
    assert!(!out.contains("->"));
    let (_, out, _) = orderkit(&["export-dot", "M3"]);
    assert_eq!(out.matches("->").count(), 6);
}

#[test]
fn search_command() {
    let (code, out, _) = orderkit(&["search", "lattice & !join_continuous"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# isomorphic to M3\n"), "{out}");
    let (code, _, _) = orderkit(&["search", "!distributive", "--max-n", "4"]);
    assert_eq!(code, 1);
    let (code, out, _) = orderkit(&["search", "!lattice", "--kind", "posets"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out).unwrap().len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_round_trip(n in 1usize..14, seed in any::<u64>(), density in 0.0..=1.0f64) {
        let p = random_poset(&GenSpec::random(n, seed, density)).unwrap();
        let text = emit(&p).unwrap();
        let q = parse(&text).unwrap();
        prop_assert!(is_isomorphic(&p, &q));
        prop_assert_eq!(canonical_form(&p), canonical_form(&q));
        prop_assert_eq!(emit(&q).unwrap(), text);
    }
}
