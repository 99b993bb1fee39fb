use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partial-hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--output", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("partial-hopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_builtins_exit_zero() {
    for args in [
        ["taft", "2"],
        ["taft", "5"],
        ["nichols", "3"],
        ["groupalg", "6"],
        ["dualgroupalg", "4"],
    ] {
        let o = run(&["validate", args[0], args[1]]);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failures"));
    }
    let o = run(&["validate", "taft", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["validate", "bogus", "3"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "taft", "1"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "taft"]).status.code(), Some(2));
    assert_eq!(run(&["import", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "validate", "taft", "2"]).status.code(), Some(2));
    assert_eq!(run(&["duality", "groupalg", "4"]).status.code(), Some(2));
}

#[test]
fn broken_structure_constants_fail_validation() {
    let good = scratch("good.json");
    assert_eq!(
        run(&["export", "taft", "3", "-o", good.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    assert_eq!(run(&["import", good.to_str().unwrap()]).status.code(), Some(0));

    // flip the sign of the counit on g
    let g = v["basis"].as_array().unwrap().iter().position(|l| l == "g").unwrap();
    v["counit"][g] = Value::String("-1".into());
    let broken = scratch("broken.json");
    std::fs::write(&broken, serde_json::to_string(&v).unwrap()).unwrap();
    let o = run(&["import", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(!stdout(&o).contains(" 0 failures"));
    let o = run(&["validate", "file", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["classify", "file", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn export_import_round_trip() {
    for (kind, n) in [("taft", "4"), ("nichols", "3"), ("groupalg", "5")] {
        let o = run(&["export", kind, n]);
        assert_eq!(o.status.code(), Some(0));
        let path = scratch(&format!("{kind}{n}.json"));
        std::fs::write(&path, &o.stdout).unwrap();
        let (code, v) = json(&["import", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        let exported: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["algebra"], exported["name"]);
        // exporting the imported file reproduces the bytes
        let again = run(&["export", "file", path.to_str().unwrap()]);
        assert_eq!(again.stdout, o.stdout);
    }
}

#[test]
fn taft4_worked_examples() {
    let o = run(&["actions", "taft", "4", "--paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("example taft4-action: lambda_alpha matches"));
    assert!(text.contains("example taft4-action-subgroup: lambda0[<g^2>] matches"));
    let o = run(&["coactions", "taft", "4", "--paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("example taft4-coaction: z_alpha matches"));

    let (code, v) = json(&["actions", "taft", "4"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["epsilon", "lambda0[<g^2>]", "lambda_alpha"]);
}

#[test]
fn identities_small_sweep() {
    let (code, v) = json(&["identities", "--n", "8", "--max", "6"]);
    assert_eq!(code, 0);
    assert!(v["failures"].as_array().unwrap().is_empty());
    let suites = v["suites"].as_array().unwrap();
    assert!(suites.iter().all(|s| s["failed"] == 0));
    assert!(suites.iter().any(|s| s["suite"] == "character_sum"));
    assert_eq!(run(&["identities", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn classify_reports_families() {
    let (code, v) = json(&["classify", "taft", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["families"].as_array().unwrap().len(), 4);
    assert_eq!(v["expected_families"], 4);
    let (code, _) = json(&["classify", "nichols", "4", "--no-shortcuts"]);
    assert_eq!(code, 0);
    let o = run(&["classify", "taft", "6", "--branch-limit", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn duality_transport() {
    for (kind, n) in [("taft", "3"), ("nichols", "3")] {
        let (code, v) = json(&["duality", kind, n]);
        assert_eq!(code, 0, "{kind} {n}");
        assert_eq!(v["inverse_ok"], true);
        assert!(v["transport"].as_array().unwrap().iter().all(|t| t["matches"] == true));
    }
}

#[test]
fn jobs_flag_gives_same_answer() {
    let a = run(&["--jobs", "1", "validate", "taft", "3"]);
    let b = run(&["--jobs", "4", "validate", "taft", "3"]);
    let strip = |o: &Output| stdout(o).lines().next().unwrap().to_string();
    assert_eq!(strip(&a), strip(&b));
}
