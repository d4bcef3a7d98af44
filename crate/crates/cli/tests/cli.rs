use std::path::PathBuf;
use std::process::{Command, Output};

use dbs_core::seed::SeedJson;
use dbs_core::{Polynomial, RationalFunction, Seed};
use serde_json::Value;

fn dbs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dbs(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("dbs-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_prints_g_for_the_trefoil() {
    let out = stdout(&["count", "--type", "A1", "--top", "", "--bottom", "1 1 1"]);
    assert!(out.contains("g = q^2 + 1"), "{out}");
    assert!(out.contains("f = 1 - 2q + 2q^2 - 2q^3 + q^4"), "{out}");
    assert!(out.contains("conjectural component count = 1"), "{out}");
}

#[test]
fn mgs_prints_the_script() {
    let out = stdout(&["mgs", "--type", "A1", "--word", "1 1 1 1"]);
    assert!(out.contains("script: 1:1,1:2,1:3,1:1,1:2,1:1"), "{out}");
    assert!(out.contains("maximal green: true"), "{out}");
}

#[test]
fn za_reports_the_pentagon() {
    let out = stdout(&["za", "--left", "A2", "--right-rank", "1"]);
    assert!(out.contains("Za order = 5 (bound 5)"), "{out}");
}

#[test]
fn other_commands() {
    assert!(stdout(&["dt-check", "--type", "A2", "--bottom", "1 2 1 2 1"]).contains("verified"));
    assert!(stdout(&["dt-order", "--type", "A1", "--bottom", "1 1 1"]).contains("DT order = 5"));
    assert_eq!(
        stdout(&["braid-eq", "--type", "A2", "--a", "1 2 1", "--b", "2 1 2"]).trim(),
        "true"
    );
    assert_eq!(
        stdout(&["braid-eq", "--type", "A2", "--a", "1 1", "--b", "2 2"]).trim(),
        "false"
    );
    let out = stdout(&["oracle", "--type", "A2", "--top", "1", "--bottom", "1", "--q", "3"]);
    assert!(out.contains("agree: true"), "{out}");
}

#[test]
fn custom_cartan_file_replaces_type() {
    let path = scratch("b2.json", r#"{"C":[[2,-2],[-1,2]],"D":[2,1]}"#);
    let named = stdout(&["count", "--type", "B2", "--bottom", "1 2 1 2"]);
    let custom = stdout(&["count", "--cartan", path.to_str().unwrap(), "--bottom", "1 2 1 2"]);
    assert_eq!(named, custom);
}

#[test]
fn engine_errors_exit_with_one() {
    let out = dbs(&["count", "--type", "A1", "--bottom", "1 2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("index out of range"), "{err}");
    assert_eq!(dbs(&["count", "--type", "X7"]).status.code(), Some(1));
    assert_eq!(dbs(&["dt-check", "--type", "A1"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(dbs(&["count", "--bottom", "1"]).status.code(), Some(2));
    assert_eq!(
        dbs(&["count", "--type", "A1", "--cartan", "c.json"]).status.code(),
        Some(2)
    );
    assert_eq!(dbs(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dbs(&["count", "--type", "A1", "--jobs", "2"]).status.code(), Some(2));
}

#[test]
fn json_output_is_stable_and_round_trips() {
    let args = ["count", "--type", "A2", "--top", "1 2", "--bottom", "2 1 2", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
    let v = json(&args);
    let f: Polynomial = serde_json::from_value(v["f"].clone()).unwrap();
    let g: RationalFunction = serde_json::from_value(v["g"].clone()).unwrap();
    assert_eq!(g.times_q_minus_1_power(4), Some(f));
    assert_eq!(v["components_conjectural"], 2);

    let seed_args = [
        "seed",
        "--type",
        "B2",
        "--top",
        "2",
        "--bottom",
        "1 2 1",
        "--pattern",
        "BTBB",
        "--json",
    ];
    let text = stdout(&seed_args);
    assert_eq!(text, stdout(&seed_args));
    let parsed: SeedJson = serde_json::from_str(&text).unwrap();
    let seed = Seed::from_json(&parsed).unwrap();
    assert_eq!(
        serde_json::to_value(seed.to_json()).unwrap(),
        serde_json::from_str::<Value>(&text).unwrap()
    );

    for args in [
        vec!["mgs", "--type", "A2", "--word", "1 2 1 2", "--json"],
        vec!["dt-check", "--type", "A2", "--bottom", "1 2 1", "--json"],
        vec!["dt-order", "--type", "A2", "--bottom", "1 2 1 2", "--json"],
        vec!["za", "--left", "A2", "--right-rank", "2", "--json"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn mutate_applies_a_script_to_a_seed_file() {
    let seed = stdout(&["seed", "--type", "A1", "--bottom", "1 1 1", "--json"]);
    let path = scratch("seed.json", &seed);
    let p = path.to_str().unwrap();
    let once = json(&["mutate", "--seed", p, "--script", "1:1", "--json"]);
    let twice = json(&["mutate", "--seed", p, "--script", "1:1,1:1", "--json"]);
    assert_ne!(once, serde_json::from_str::<Value>(&seed).unwrap());
    assert_eq!(twice, serde_json::from_str::<Value>(&seed).unwrap());
    assert_eq!(dbs(&["mutate", "--seed", p, "--script", "1:0"]).status.code(), Some(1));
}

#[test]
fn batch_counts_match_single_runs_in_order() {
    let path = scratch("batch.txt", "# top | bottom\n1 | 1 1\n | 1 1 1 1\n1 1 | 1 1 1\n");
    let batch = json(&[
        "count",
        "--type",
        "A1",
        "--batch",
        path.to_str().unwrap(),
        "--jobs",
        "3",
        "--json",
    ]);
    let singles: Vec<Value> = [("1", "1 1"), ("", "1 1 1 1"), ("1 1", "1 1 1")]
        .iter()
        .map(|(t, b)| json(&["count", "--type", "A1", "--top", t, "--bottom", b, "--json"]))
        .collect();
    assert_eq!(batch, Value::Array(singles));
    let orders = json(&[
        "dt-order",
        "--type",
        "A1",
        "--batch",
        path.to_str().unwrap(),
        "--jobs",
        "2",
        "--json",
    ]);
    assert_eq!(orders.as_array().unwrap().len(), 3);
}
