#![allow(dead_code)]

use serde_json::Value;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_quadsat")
}

pub fn run(args: &[&str], stdin: Option<&str>) -> Run {
    run_env(args, stdin, &[])
}

pub fn run_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(bin());
    cmd.args(args)
        .env_remove("QS_EPSILON")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn quadsat");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).expect("write stdin");
        }
    }
    let out = child.wait_with_output().expect("wait");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
    }
}

/// Report text with the timing field removed, for byte comparisons.
pub fn strip_elapsed(stdout: &str) -> String {
    stdout
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

/// Validates a full report against the envelope schema and its payload
/// against the schema for its command.
pub fn validate_report(report: &Value) -> Result<(), String> {
    let load = |name: &str| -> Value {
        let path = schema_dir().join(format!("{name}.schema.json"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        serde_json::from_str(&text).expect("schema is JSON")
    };
    let check = |schema: &Value, instance: &Value, what: &str| -> Result<(), String> {
        let validator = jsonschema::validator_for(schema).map_err(|e| format!("{what} schema: {e}"))?;
        let errors: Vec<String> = validator.iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(format!("{what}: {}", errors.join("; ")))
        }
    };
    check(&load("report"), report, "report")?;
    let command = report["command"].as_str().ok_or("missing command")?;
    check(&load(command), &report["payload"], command)
}

pub mod graphs {
    use quadsat::Graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Sparse random graph with `K_s` planted on the first vertices, where
    /// `s = ⌈√m + 1⌉` for the final edge count `m`, so that `λ ≥ √m`.
    pub fn planted(seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(20..=60);
        let p = rng.random_range(0.02..0.12);
        let mut g = gnp(n, p, &mut rng);
        loop {
            let s = ((g.m() as f64).sqrt() + 1.0).ceil() as usize;
            let mut changed = false;
            for u in 0..s.min(n) {
                for v in u + 1..s.min(n) {
                    if !g.has_edge(u, v) {
                        g = g.add_edge(u, v).unwrap();
                        changed = true;
                    }
                }
            }
            if !changed {
                return g;
            }
        }
    }
}
