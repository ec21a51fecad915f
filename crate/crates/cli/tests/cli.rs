use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn extremal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the subset of JSON Schema keywords the published schema uses.
fn conforms(root: &Value, schema: &Value, doc: &Value) -> bool {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local ref");
        return conforms(root, &root["$defs"][name], doc);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        return options.iter().filter(|s| conforms(root, s, doc)).count() == 1;
    }
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => unreachable!(),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => doc.is_object(),
            "array" => doc.is_array(),
            "string" => doc.is_string(),
            "integer" => doc.is_i64() || doc.is_u64(),
            "number" => doc.is_number(),
            "boolean" => doc.is_boolean(),
            "null" => doc.is_null(),
            other => panic!("unsupported type {other}"),
        });
        if !ok {
            return false;
        }
    }
    if let Some(c) = schema.get("const") {
        if c != doc {
            return false;
        }
    }
    if let Some(e) = schema.get("enum").and_then(Value::as_array) {
        if !e.contains(doc) {
            return false;
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), doc.as_f64()) {
        if x < min {
            return false;
        }
    }
    if let Some(obj) = doc.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(req) = schema.get("required").and_then(Value::as_array) {
            if !req.iter().all(|k| obj.contains_key(k.as_str().unwrap())) {
                return false;
            }
        }
        for (k, v) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(s) => {
                    if !conforms(root, s, v) {
                        return false;
                    }
                }
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return false
                }
                None => {}
            }
        }
    }
    if let Some(items) = doc.as_array() {
        let len = items.len() as u64;
        if schema
            .get("minItems")
            .and_then(Value::as_u64)
            .is_some_and(|m| len < m)
            || schema
                .get("maxItems")
                .and_then(Value::as_u64)
                .is_some_and(|m| len > m)
        {
            return false;
        }
        if let Some(s) = schema.get("items") {
            if !items.iter().all(|v| conforms(root, s, v)) {
                return false;
            }
        }
    }
    true
}

fn assert_conforms(doc: &Value) {
    let root = schema();
    assert!(conforms(&root, &root, doc), "does not match schema: {doc}");
}

#[test]
fn validate_reports_order_and_class() {
    let out = extremal(&["validate", "5,4,3^3,2^10,1^8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n=23 c=1 valid\n");
    let out = extremal(&["validate", "2^5", "--json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["c"], 1);
    assert_conforms(&doc);
}

#[test]
fn errors_map_to_distinct_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "3,3,3"], 12),
        (&["validate", "3,x"], 17),
        (&["validate", "1,1,1,1"], 13),
        (&["classify", "--f", "wiener"], 31),
        (&["classify", "--f", "general_randic"], 32),
        (&["build", "--kind", "um", "--pi", "3,1,1,1"], 41),
        (&["build", "--kind", "s2", "--n", "3"], 43),
        (&["build", "--kind", "bm"], 2),
        (&["chain", "--pi", "3,1,1,1", "--pi-prime", "2,2,1,1"], 16),
        (
            &["eval", "--f", "randic", "--graph", "/nonexistent/graph"],
            60,
        ),
    ];
    for (args, code) in cases {
        let out = extremal(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn enumeration_bound_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(["majorize", "--pi", "2^6", "--pi-prime", "3,2^4,1"])
        .args(["--f", "second_zagreb"])
        .env("EXTREMAL_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(50));
}

#[test]
fn eval_on_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.edges");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = extremal(&[
        "eval",
        "--f",
        "second_zagreb",
        "--graph",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "20\n");
}

#[test]
fn classify_abc_is_de_escalating() {
    let out = extremal(&["classify", "--f", "abc", "--D", "12"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verdict"], "de-escalating");
    assert_eq!(doc["D"], 12);
    assert_eq!(doc["good"], false);
    assert_conforms(&doc);
}

#[test]
fn classify_default_grid_covers_the_sequence() {
    let out = extremal(&["classify", "--f", "reformulated_zagreb", "--pi", "14,1^14"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["D"], 15);
    assert_eq!(doc["verdict"], "escalating");
    assert_eq!(doc["good"], true);
    assert_eq!(doc["witness"], Value::Null);
    assert_conforms(&doc);
}

#[test]
fn build_formats() {
    let out = extremal(&["build", "--kind", "f", "--n", "5", "--k", "2"]);
    assert_eq!(stdout(&out), "5 4\n0 1\n0 2\n1 3\n2 4\n");
    let out = extremal(&["build", "--kind", "s1", "--n", "4", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph \"s1\" {"));
    assert!(dot.contains("1 -- 2;"));
    let out = extremal(&["build", "--kind", "greedy-tree", "--pi", "3,3,2,2,1^4"]);
    assert!(out.status.success());
    let out = extremal(&[
        "build",
        "--kind",
        "um",
        "--pi",
        "3,2,2,2,1",
        "--format",
        "json",
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 5);
    assert_conforms(&doc);
}

#[test]
fn build_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    for path in [&a, &b] {
        let out = extremal(&[
            "build",
            "--kind",
            "bm",
            "--pi",
            "4,3,3,2,2,1,1",
            "--format",
            "dot",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_unicyclic_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("results.jsonl");
    let out = extremal(&[
        "verify",
        "--suite",
        "unicyclic",
        "--max-n",
        "7",
        "--f",
        "reformulated_zagreb:2",
        "--output",
        results.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("extremal: 25 sequences, 0 failed"));
    let text = std::fs::read_to_string(&results).unwrap();
    let mut kinds = (0, 0);
    for line in text.lines() {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert_conforms(&doc);
        match doc["record"].as_str() {
            Some("extremal") => {
                kinds.0 += 1;
                assert_eq!(doc["constructor_matches"], true);
            }
            Some("majorization") => {
                kinds.1 += 1;
                assert_eq!(doc["strict_inequality_holds"], true);
            }
            other => panic!("unexpected record {other:?}"),
        }
    }
    assert_eq!(kinds.0, 25);
    assert!(kinds.1 > 0);
}

#[test]
fn verify_output_does_not_depend_on_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for workers in ["1", "4"] {
        let path = dir.path().join(format!("w{workers}.jsonl"));
        let out = extremal(&[
            "verify",
            "--suite",
            "tree",
            "--max-n",
            "8",
            "--f",
            "abc",
            "--output",
            path.to_str().unwrap(),
            "--workers",
            workers,
        ]);
        assert!(out.status.success());
        files.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
}

#[test]
fn verify_rejects_unclassifiable_functions() {
    let out = extremal(&[
        "verify",
        "--suite",
        "tree",
        "--max-n",
        "5",
        "--f",
        "first_zagreb",
    ]);
    assert_eq!(out.status.code(), Some(52));
}

#[test]
fn majorize_reports_strict_increase() {
    let out = extremal(&[
        "majorize",
        "--pi",
        "2^5",
        "--pi-prime",
        "3,2,2,2,1",
        "--f",
        "reformulated_zagreb:2",
    ]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["value_pi"], 20);
    assert_eq!(doc["value_pi_prime"], 32);
    assert_eq!(doc["claim"], "theorem");
    assert_conforms(&doc);
}

#[test]
fn chain_lists_unit_steps() {
    let out = extremal(&["chain", "--pi", "2^5", "--pi-prime", "3,3,2,1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3^2,2,1^2\n3,2^3,1\n2^5\n");
}

#[test]
fn schema_checker_rejects_malformed_reports() {
    let root = schema();
    let bad = serde_json::json!({"name": "abc", "alpha": null, "D": 12, "verdict": "sideways", "good": false, "witness": null});
    assert!(!conforms(&root, &root, &bad));
    let missing = serde_json::json!({"n": 3});
    assert!(!conforms(&root, &root, &missing));
}
