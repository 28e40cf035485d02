#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn distinguo_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_distinguo"));
    cmd.args(args).env_remove("DISTINGUO_MEMO_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit status"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn distinguo(args: &[&str]) -> Run {
    distinguo_env(args, &[])
}

fn schema_path(tag: &str) -> PathBuf {
    let mut parts = tag.split('/');
    assert_eq!(parts.next(), Some("distinguo"), "schema tag {tag}");
    let kind = parts.next().unwrap();
    let version = parts.next().unwrap();
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(version).join(format!("{kind}.schema.json"))
}

/// Parses one JSON document and checks it against the schema its tag names.
pub fn validated(text: &str) -> Value {
    let doc: Value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    let tag = doc["schema"].as_str().expect("schema tag").to_string();
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(&tag)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(&doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{tag}: {errors:?}\n{text}");
    doc
}
