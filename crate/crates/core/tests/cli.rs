use aldp_core::cli;
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Stdio};
use std::io::Write;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aldp"))
}

fn run(args: &[&str]) -> cli::Outcome {
    let mut argv = vec!["aldp"];
    argv.extend_from_slice(args);
    cli::run(argv, &mut std::io::empty())
}

fn run_stdin(args: &[&str], input: &str) -> cli::Outcome {
    let mut argv = vec!["aldp"];
    argv.extend_from_slice(args);
    cli::run(argv, &mut input.as_bytes())
}

fn json(out: &cli::Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn validator(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

const GROUPED: &str = r#"{"model":{"Fn":0},"boundary":[["2/1","1/1"]],
  "blowups":[{"on":[0],"fiber_group":0},{"on":[0],"fiber_group":0}]}"#;

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["verify", "--family", "I.9B.3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let mut child = bin()
        .args(["verify", "--pair-json", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(GROUPED.as_bytes()).unwrap();
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(2));
    let bad = bin().args(["verify", "--family", "I.8C"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(bin().arg("--help").output().unwrap().status.code(), Some(0));
    assert_eq!(bin().arg("--bogus").output().unwrap().status.code(), Some(1));
}

#[test]
fn malformed_inputs_exit_one() {
    for input in ["not json", r#"{"model":"P3","boundary":[["1/1"]]}"#, r#"{"model":"P2","boundary":[]}"#] {
        let out = run_stdin(&["verify", "--pair-json", "-"], input);
        assert_eq!(out.code, 1, "{input}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(run(&["verify", "--family", "I.9B.3", "--n", "2"]).code, 1);
    assert_eq!(run(&["verify", "--family", "I.9B.3", "--beta", "1/2,1/3"]).code, 1);
    assert_eq!(run(&["alpha", "--limit"]).code, 1);
    assert_eq!(run(&["alpha", "--limit", "--family", "II.2A.1"]).code, 1);
}

#[test]
fn show_then_verify_round_trip() {
    for label in ["I.9B.3", "II.6A.2.3", "I.6C.2", "III.2"] {
        let shown = run(&["catalog-show", "--family", label, "--format", "json"]);
        assert_eq!(shown.code, 0, "{label}: {}", shown.stderr);
        let pair = json(&shown)["pair"].to_string();
        let out = run_stdin(&["verify", "--pair-json", "-", "--format", "json"], &pair);
        assert_eq!(out.code, 0, "{label}: {}", out.stderr);
        assert_eq!(json(&out)["verdict"]["strong"], "Positive", "{label}");
    }
}

#[test]
fn provenance_mismatch_is_rejected() {
    let pair = r#"{"model":{"Fn":0},"boundary":[["2/1","1/1"]],
      "blowups":[{"on":[0],"fiber_group":0},{"on":[0],"fiber_group":0}],
      "family":{"family":"I.9B.m","m":2}}"#;
    assert_eq!(run_stdin(&["verify", "--pair-json", "-"], pair).code, 1);
}

#[test]
fn not_positive_names_a_witness() {
    let out = run_stdin(&["verify", "--pair-json", "-", "--format", "json"], GROUPED);
    assert_eq!(out.code, 2);
    let v = json(&out);
    assert_eq!(v["verdict"]["strong"], "NotPositive");
    assert!(validator("verify.schema.json").is_valid(&v));
    let table = run_stdin(&["verify", "--pair-json", "-"], GROUPED);
    assert_eq!(table.code, 2);
    assert!(table.stdout.contains("NotPositive"));
}

#[test]
fn outputs_are_deterministic() {
    let cmds: [&[&str]; 5] = [
        &["catalog-list", "--format", "json", "--max-m", "4"],
        &["catalog-show", "--family", "II.6A.2.3", "--format", "json"],
        &["verify", "--family", "I.7.1.2", "--format", "json"],
        &["classify", "--family", "I.6C.2", "--format", "json"],
        &["conic-bundle", "--family", "I.9B.2", "--format", "json"],
    ];
    for args in cmds {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let c = bin().args(args).output().unwrap();
        assert_eq!(String::from_utf8(c.stdout).unwrap(), a.stdout, "{args:?}");
    }
}

#[test]
fn outputs_match_schemas() {
    let pair = validator("pair.schema.json");
    let verify = validator("verify.schema.json");
    let alpha = validator("alpha.schema.json");
    let catalog = validator("catalog.schema.json");
    for label in ["I.1A", "I.9B.3", "II.6A.2.3", "III.2", "I.7.1.2"] {
        let shown = json(&run(&["catalog-show", "--family", label, "--format", "json"]));
        assert!(pair.is_valid(&shown["pair"]), "{label}");
        let v = json(&run(&["verify", "--family", label, "--format", "json"]));
        assert!(verify.is_valid(&v), "{label}: {v}");
    }
    let list = json(&run(&["catalog-list", "--format", "json", "--max-m", "3"]));
    assert!(catalog.is_valid(&list));
    let alphas: [&[&str]; 4] = [
        &["alpha", "--limit", "--family", "I.4B", "--format", "json"],
        &["alpha", "--anticanonical", "2", "--beta", "1/10", "--format", "json"],
        &["alpha", "--big", "--epsilon", "1/2", "--beta", "1/3", "--format", "json"],
        &["alpha", "--toric", "--beta", "1/2,1/4,1/4", "--format", "json"],
    ];
    for args in alphas {
        let out = run(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        assert!(alpha.is_valid(&json(&out)), "{args:?}: {}", out.stdout);
    }
}

#[test]
fn classify_and_thresholds() {
    assert_eq!(run(&["classify", "--family", "I.6C.2"]).stdout.trim(), "Gimel");
    assert_eq!(json(&run(&["classify", "--family", "I.1A", "--format", "json"]))["class"], "Aleph");
    let a = json(&run(&["alpha", "--limit", "--family", "I.4B", "--format", "json"]));
    assert_eq!(a["value"], "1/2");
    let l = json(&run(&["lct", "--preset", "tangent-fiber", "--beta", "1/3", "--format", "json"]));
    assert_eq!(l["lct"]["value"]["text"], "(1 + 2*b)/(2 + 2*b)");
    assert_eq!(l["value_at_beta"], "5/8");
    let e = json(&run(&["lct", "--preset", "eckardt", "--beta", "1/2", "--format", "json"]));
    assert_eq!(e["value_at_beta"], "3/5");
}

#[test]
fn regen_tables_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["regen-tables", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["theorem_4cases.json", "kee_status.json", "aut_groups.json"] {
        let got = std::fs::read_to_string(dir.path().join(name)).unwrap();
        let want = std::fs::read_to_string(golden.join(name)).unwrap();
        assert_eq!(got, want, "{name}");
    }
    assert!(dir.path().join("catalog.json").exists());
}
