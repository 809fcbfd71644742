//! End-to-end checks of the command-line surface: file formats, exit
//! codes, and report output.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ordkit"))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const CHAIN_SIG: &str = r#"{
    "sorts": {"C2": {"elements": ["0", "1"], "leq": [["0", "1"]]}}
}"#;

#[test]
fn eval_reports_entailment_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let sig = write_temp(&dir, "sig.json", CHAIN_SIG);

    let out = bin()
        .args(["eval", "--sig", &sig, "--sequent", "x <= y /\\ y <= x |- x = y"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("holds"));

    let out = bin()
        .args(["eval", "--sig", &sig, "--sequent", "top |- x <= y", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["holds"], serde_json::json!(false));
    assert_eq!(parsed["witness"][0]["var"], serde_json::json!("x"));

    // An explicit context is accepted.
    let out = bin()
        .args([
            "eval",
            "--sig",
            &sig,
            "--sequent",
            "x = y |- y = x",
            "--context",
            "x:C2,y:C2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn eval_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let sig = write_temp(&dir, "sig.json", CHAIN_SIG);
    // Unknown symbol in the sequent.
    let out = bin()
        .args(["eval", "--sig", &sig, "--sequent", "f(x) = y |- top"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Missing file.
    let out = bin()
        .args(["eval", "--sig", "nope.json", "--sequent", "top |- top"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Bad flags are rejected by the parser.
    let out = bin().args(["eval", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_sweeps_report_and_pass() {
    let out = bin()
        .args(["check", "filtral", "--size", "3", "--exhaustive", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // All labeled posets of sizes 0..=3.
    assert_eq!(lines.len(), 24);
    for line in lines {
        let report: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["verdict"], serde_json::json!("pass"));
    }

    let out = bin()
        .args(["check", "orthogonality", "--trials", "25", "--size", "4", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["check", "beck-chevalley", "--trials", "10", "--size", "3", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_output_is_deterministic_for_a_seed() {
    let run = || {
        stdout(
            &bin()
                .args(["check", "frobenius", "--trials", "8", "--size", "3", "--seed", "42", "--format", "json"])
                .output()
                .unwrap(),
        )
    };
    assert_eq!(run(), run());
}

#[test]
fn quotient_collapses_forced_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write_temp(&dir, "p.json", r#"{"elements": ["0", "1"], "leq": [["0", "1"]]}"#);
    let relation = write_temp(
        &dir,
        "r.json",
        r#"{
            "src": {"elements": ["0", "1"], "leq": [["0", "1"]]},
            "dst": {"elements": ["0", "1"], "leq": [["0", "1"]]},
            "pairs": [["1", "0"]]
        }"#,
    );
    let out = bin()
        .args(["quotient", "--poset", &poset, "--relation", &relation, "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // One class: the whole chain collapses.
    let text = stdout(&out);
    let first: serde_json::Value = serde_json::from_str(
        text.split("}\n{").next().map(|s| format!("{s}}}")).unwrap().as_str(),
    )
    .unwrap_or_else(|_| serde_json::from_str(&text).unwrap());
    assert_eq!(first["elements"].as_array().unwrap().len(), 1);
}

#[test]
fn limit_computes_products() {
    let dir = tempfile::tempdir().unwrap();
    let diagram = write_temp(
        &dir,
        "d.json",
        r#"{
            "nodes": {
                "a": {"elements": ["0", "1"], "leq": [["0", "1"]]},
                "b": {"elements": ["0", "1"], "leq": [["0", "1"]]}
            },
            "edges": []
        }"#,
    );
    let out = bin()
        .args(["limit", "--diagram", &diagram, "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn limit_accepts_weight_files() {
    let dir = tempfile::tempdir().unwrap();
    let diagram = write_temp(
        &dir,
        "d.json",
        r#"{"nodes": {"x": {"elements": ["0", "1"], "leq": [["0", "1"]]}}, "edges": []}"#,
    );
    // Weighting the single node by the chain: the cotensor, with three
    // comparable-pair elements.
    let weight = write_temp(
        &dir,
        "w.json",
        r#"{"nodes": {"x": {"elements": ["0", "1"], "leq": [["0", "1"]]}}, "edges": []}"#,
    );
    let out = bin()
        .args(["limit", "--diagram", &diagram, "--weight", &weight, "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["elements"].as_array().unwrap().len(), 3);
}

#[test]
fn colimit_coinserter_orders_two_points() {
    let dir = tempfile::tempdir().unwrap();
    let point = r#"{"elements": ["*"], "leq": []}"#;
    let antichain = r#"{"elements": ["a", "b"], "leq": []}"#;
    let f = write_temp(
        &dir,
        "f.json",
        &format!(r#"{{"dom": {point}, "cod": {antichain}, "map": {{"*": "a"}}}}"#),
    );
    let g = write_temp(
        &dir,
        "g.json",
        &format!(r#"{{"dom": {point}, "cod": {antichain}, "map": {{"*": "b"}}}}"#),
    );
    let out = bin()
        .args(["colimit", "coinserter", "--f", &f, "--g", &g])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("a<b"));
}

#[test]
fn colimit_coproduct_and_lax_pushout() {
    let dir = tempfile::tempdir().unwrap();
    let left = write_temp(&dir, "a.json", r#"{"elements": ["0", "1"], "leq": [["0", "1"]]}"#);
    let right = write_temp(&dir, "b.json", r#"{"elements": ["x", "y", "z"], "leq": [["x", "z"], ["y", "z"]]}"#);
    let out = bin()
        .args(["colimit", "coproduct", "--left", &left, "--right", &right])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("FinPoset"));

    // The two-chains-glued-at-zero pushout violates the exact cross-pair
    // condition, which is reported, not raised: exit 1 with a witness.
    let point = r#"{"elements": ["*"], "leq": []}"#;
    let chain = r#"{"elements": ["0", "1"], "leq": [["0", "1"]]}"#;
    let f = write_temp(
        &dir,
        "f.json",
        &format!(r#"{{"dom": {point}, "cod": {chain}, "map": {{"*": "0"}}}}"#),
    );
    let out = bin()
        .args(["colimit", "lax-pushout", "--f", &f, "--g", &f])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    assert!(stdout(&out).contains("FAIL"));

    // The pushout of the point along itself satisfies every condition.
    let id = write_temp(
        &dir,
        "id.json",
        &format!(r#"{{"dom": {point}, "cod": {point}, "map": {{"*": "*"}}}}"#),
    );
    let out = bin()
        .args(["colimit", "lax-pushout", "--f", &id, "--g", &id])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn duality_commands() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write_temp(&dir, "v.json", r#"{"elements": ["x", "y", "z"], "leq": [["x", "z"], ["y", "z"]]}"#);
    let out = bin()
        .args(["duality", "roundtrip", "--poset", &poset])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin().args(["duality", "xi", "--size", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 4); // |S| = 0..=3
}

#[test]
fn nerve_demo_passes_on_builtin_family() {
    let out = bin().args(["nerve-demo"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(stdout(&out).lines().count(), 25);
}

#[test]
fn export_dot_renders_covers() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write_temp(&dir, "c3.json", r#"{"elements": ["0", "1", "2"], "leq": [["0", "1"], ["1", "2"]]}"#);
    let out = bin().args(["export-dot", "--poset", &poset]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"0\" -> \"1\""));
    assert!(!text.contains("\"0\" -> \"2\""));

    // Writing to a file.
    let target = dir.path().join("out.dot");
    let out = bin()
        .args(["export-dot", "--poset", &poset, "--out", target.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(target).unwrap().contains("digraph"));

    // The --format dot flag renders constructed posets too.
    let diagram = write_temp(
        &dir,
        "d.json",
        r#"{"nodes": {"a": {"elements": ["0", "1"], "leq": [["0", "1"]]}}, "edges": []}"#,
    );
    let out = bin()
        .args(["limit", "--diagram", &diagram, "--format", "dot"])
        .output()
        .unwrap();
    assert!(stdout(&out).contains("digraph"));
}

#[test]
fn bad_size_cap_env_is_a_usage_error() {
    let out = bin()
        .env("ORDKIT_SIZE_CAP", "not-a-number")
        .args(["duality", "xi", "--size", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("ORDKIT_SIZE_CAP", "12")
        .args(["duality", "xi", "--size", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
