//! Helpers shared by the CLI and acceptance test targets.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use spectral_chroma::cli::CONFIG_ENV;

pub const BIN: &str = env!("CARGO_BIN_EXE_spectral-chroma");

/// Relative tolerance for quadrature-derived numbers in golden files.
pub const GOLDEN_RTOL: f64 = 1e-9;

/// `(golden file stem, command line)`; every case exits 0.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("eval_sigma_half", &["eval", "--r", "3", "--sigma", "0.5"]),
    ("eval_s1_r2", &["eval", "--r", "2", "--s", "1"]),
    ("scan_r4", &["scan", "--r", "4", "--format", "json"]),
    ("bounds_r10", &["bounds", "--r", "10"]),
    ("bounds_r10_lambda_quarter", &["bounds", "--r", "10", "--lambda", "0.25"]),
    ("bounds_r3", &["bounds", "--r", "3"]),
    ("graph_petersen", &["graph", "--input", "examples/graphs/petersen.txt", "--regular"]),
    ("graph_k5", &["graph", "--input", "examples/graphs/k5.txt"]),
    ("verify_sigma_half", &["verify", "--r", "1.5", "--sigma", "0.5", "--n", "64"]),
    (
        "verify_s2",
        &["verify", "--r", "1.5", "--s", "2", "--n", "2048", "--base", "0.7,2.0"],
    ),
];

/// `(command line, expected exit code)`.
pub const EXIT_CASES: &[(&[&str], i32)] = &[
    (&["eval", "--r", "3", "--sigma", "0.5"], 0),
    (&["--version"], 0),
    (&["eval", "--r", "-1", "--s", "1"], 2),
    (&["eval", "--r", "1"], 2),
    (&["eval", "--r", "1", "--s", "1", "--sigma", "0.2"], 2),
    (&["eval", "--r", "1", "--sigma", "0.6"], 2),
    (&["eval", "--r", "1", "--s", "1", "--tol", "-1"], 2),
    (&["scan", "--r", "0"], 2),
    (&["scan", "--r", "4", "--step", "-0.1"], 2),
    (&["bounds", "--r", "10", "--lambda", "0.1"], 2),
    (&["bounds", "--r", "10", "--lambda", "0.1", "--c", "1.0"], 2),
    (&["graph", "--input", "tests/fixtures/self_loop.txt"], 2),
    (&["graph", "--input", "tests/fixtures/does_not_exist.txt"], 2),
    (&["graph", "--input", "tests/fixtures/edgeless.txt"], 4),
    (&["verify", "--r", "1.5", "--s", "2", "--base", "1"], 2),
    (&["verify", "--r", "1.5", "--s", "2", "--n", "8"], 5),
    (&["no-such-command"], 2),
];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn spectral_chroma(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(crate_dir())
        .env_remove(CONFIG_ENV)
        .output()
        .expect("binary runs")
}

pub fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}):\n{}\nstderr:\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

pub fn result(v: &Value, key: &str) -> f64 {
    v["results"][key]["value"]
        .as_f64()
        .unwrap_or_else(|| panic!("results.{key} missing in {v}"))
}

fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= GOLDEN_RTOL * a.abs().max(b.abs())
}

/// Structural equality with numbers compared to [`GOLDEN_RTOL`].
pub fn compare_json(actual: &Value, expected: &Value, path: &str) -> Result<(), String> {
    match (actual, expected) {
        (Value::Number(a), Value::Number(b)) => {
            let (a, b) = (a.as_f64().unwrap(), b.as_f64().unwrap());
            if close(a, b) {
                Ok(())
            } else {
                Err(format!("{path}: {a} != golden {b}"))
            }
        }
        (Value::Object(a), Value::Object(b)) => {
            let ka: Vec<_> = a.keys().collect();
            let kb: Vec<_> = b.keys().collect();
            if ka != kb {
                return Err(format!("{path}: keys {ka:?} != golden {kb:?}"));
            }
            a.iter()
                .try_for_each(|(k, v)| compare_json(v, &b[k], &format!("{path}.{k}")))
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                return Err(format!("{path}: length {} != golden {}", a.len(), b.len()));
            }
            a.iter()
                .zip(b)
                .enumerate()
                .try_for_each(|(i, (x, y))| compare_json(x, y, &format!("{path}[{i}]")))
        }
        _ if actual == expected => Ok(()),
        _ => Err(format!("{path}: {actual} != golden {expected}")),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.json"))
}

/// Runs `args`, requires exit 0 and compares stdout with the golden record.
/// With `UPDATE_GOLDEN` set, rewrites the golden file first.
pub fn check_golden(name: &str, args: &[&str]) -> Result<Value, String> {
    let out = spectral_chroma(args);
    if out.status.code() != Some(0) {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let actual: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{name}: {e}"))?;
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&actual).unwrap() + "\n")
            .map_err(|e| e.to_string())?;
    }
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let expected: Value = serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
    compare_json(&actual, &expected, name)?;
    Ok(actual)
}

/// Runs every [`EXIT_CASES`] entry; returns the mismatches.
pub fn exit_code_mismatches() -> Vec<String> {
    EXIT_CASES
        .iter()
        .filter_map(|(args, code)| {
            let got = spectral_chroma(args).status.code();
            (got != Some(*code)).then(|| format!("{args:?}: exit {got:?}, expected {code}"))
        })
        .collect()
}
