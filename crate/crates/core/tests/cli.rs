use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corelattice"))
        .args(args)
        .env_remove("CORE_LATTICE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> JSONSchema {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(schema: &JSONSchema, v: &Value) {
    if let Err(errs) = schema.validate(v) {
        let msgs: Vec<String> = errs.map(|e| e.to_string()).collect();
        panic!("{v} does not validate: {msgs:?}");
    }
}

#[test]
fn cores_stats() {
    assert_eq!(stdout(&["cores", "3", "8", "--stats"]), "count=15 max=21 mean=7 argmax=a=3;[5,2]\n");
    assert!(stdout(&["cores", "3", "8", "--from-semigroups", "--stats"]).starts_with("count=10 "));
}

#[test]
fn cores_json_validates() {
    let s = schema("stats");
    for args in [&["cores", "3", "8"][..], &["cores", "5", "7", "9"], &["cores", "3", "8", "--from-semigroups"]] {
        let mut a = args.to_vec();
        a.extend(["--stats", "--format", "json"]);
        let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
        assert_valid(&s, &v);
    }
    let v: Value = serde_json::from_str(&stdout(&["cores", "3", "8", "--format", "json"])).unwrap();
    assert_eq!(v["mean"], serde_json::json!({"num": 7, "den": 1}));
}

#[test]
fn cores_dump() {
    let text = stdout(&["cores", "3", "4", "--dump"]);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "x1,x2");
    // C(7,3)/7 = 5 cores
    assert_eq!(rows.len(), 6);
}

#[test]
fn cores_rejects_bad_moduli() {
    for args in [&["cores", "4", "6"][..], &["cores", "3", "6"], &["cores", "1", "3"], &["cores", "3", "8", "10", "--from-semigroups"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(run(&["cores", "4", "6"]).stderr).unwrap();
    assert!(err.contains("gcd"), "{err}");
}

#[test]
fn partition_views() {
    let out = stdout(&["partition", "0,1,4,5,7,→", "--hooks"]);
    assert!(out.contains("partition (4,2,2)"));
    assert!(out.contains("|6 |5 |2 |1 |"));
    let out = stdout(&["partition", "(4,2,2)", "--conjugate", "--apery", "4"]);
    assert!(out.contains("conjugate (3,3,1,1)"));
    assert!(out.contains("apery     a=4;[0,2,1]"));
    assert!(stdout(&["partition", "0,1,4,5,7,->"]).contains("set       0,1,4,5,7,→"));
    assert_eq!(run(&["partition", "0,2,1"]).status.code(), Some(1));
    assert_eq!(run(&["partition", "(2,3)"]).status.code(), Some(1));
    // 3 is not in the atom monoid of {0,1,4,5,7,→}
    assert_eq!(run(&["partition", "0,1,4,5,7,→", "--apery", "3"]).status.code(), Some(1));
}

#[test]
fn antiatom_reports() {
    assert_eq!(stdout(&["antiatom", "0,4,→"]), "S=0,4,→ P=3 M=2\n");
    assert_eq!(stdout(&["antiatom", "gens", "4", "5", "6", "7"]), "S=0,4,→ P=3 M=2\n");
    let s = schema("antiatom");
    let v: Value =
        serde_json::from_str(&stdout(&["antiatom", "0,3,6,→", "--witnesses", "--format", "json"])).unwrap();
    assert_valid(&s, &v);
    assert_eq!(
        v,
        serde_json::json!({"semigroup":"0,3,6,→","P":2,"M":2,"witnesses":["0,3,6,→","0,1,3,4,6,→"]})
    );
    let out = run(&["antiatom", "0,1,3,→"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not closed: 1+1=2 missing"));
}

#[test]
fn tree_output() {
    assert_eq!(stdout(&["tree", "0"]), "{\"gens\":[1],\"genus\":0,\"parent\":null}\n");
    let text = stdout(&["tree", "5", "--annotate"]);
    let s = schema("tree_node");
    let nodes: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(nodes.len(), 27);
    for n in &nodes {
        assert_valid(&s, n);
    }
    assert_eq!(stdout(&["tree", "8", "--census"]).lines().last(), Some("8,67"));
    assert!(stdout(&["tree", "2", "--dot"]).starts_with("digraph"));
    assert_eq!(run(&["tree", "31"]).status.code(), Some(1));
}

#[test]
fn gamma_and_ratio() {
    let text = stdout(&["gamma", "5", "--format", "csv"]);
    assert_eq!(text.lines().nth(5), Some("5,10,5/8,5,16"));
    let v: Value = serde_json::from_str(&stdout(&["ratio", "3", "11", "--format", "json"])).unwrap();
    assert_eq!(v["limit"], serde_json::json!({"num": 1, "den": 2}));
    assert_eq!(run(&["ratio", "5", "11"]).status.code(), Some(1));
}

#[test]
fn budget_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_corelattice"))
        .args(["gamma", "8"])
        .env("CORE_LATTICE_BUDGET", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
    let out = Command::new(env!("CARGO_BIN_EXE_corelattice"))
        .args(["antiatom", "0,4,→"])
        .env("CORE_LATTICE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "anderson", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("verify"), &v);
    assert_eq!(v["passed"], true);

    // one printed label disagrees with the computed one
    let out = run(&["verify", "figure2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout).unwrap().contains("⟨5,6,7,8,9⟩"));

    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["cores", "3"]).status.code(), Some(1));
    assert_eq!(run(&["cores", "x", "8"]).status.code(), Some(1));
    assert_eq!(run(&["cores", "3", "8", "--format", "yaml"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn deterministic() {
    for args in [&["cores", "5", "7", "--dump"][..], &["tree", "6", "--annotate"], &["antiatom", "gens", "5", "7", "9", "--witnesses"]] {
        assert_eq!(stdout(args), stdout(args));
    }
    assert_eq!(
        stdout(&["cores", "7", "9", "--format", "json"]),
        stdout(&["cores", "7", "9", "--format", "json", "--jobs", "4"])
    );
}
