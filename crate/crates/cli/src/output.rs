//! Rendering of results and the run manifest.

use std::collections::BTreeMap;
use std::time::Duration;

use serde_json::{json, Value};

use crate::{Format, Global};

/// Everything a subcommand produces.
#[derive(Debug, Default)]
pub struct Outcome {
    pub command: String,
    pub result: Value,
    pub text: String,
    /// Named yes/no results; any `false` makes the exit code 1.
    pub verdicts: BTreeMap<String, bool>,
    /// Input path to SHA-256 of its contents.
    pub inputs: BTreeMap<String, String>,
    pub n: Option<usize>,
    pub d: Option<Vec<usize>>,
    pub degree_bound: Option<u32>,
}

fn manifest(argv: &[String], o: &Outcome, elapsed: Duration) -> Value {
    json!({
        "command_line": argv.join(" "),
        "inputs": o.inputs,
        "n": o.n,
        "d": o.d,
        "degree_bound": o.degree_bound,
        "elapsed_seconds": elapsed.as_secs_f64(),
        "verdicts": o.verdicts,
    })
}

pub fn emit(global: &Global, argv: &[String], o: &Outcome, elapsed: Duration) {
    match global.format {
        Format::Json => {
            let doc = json!({"command": o.command, "result": o.result, "manifest": manifest(argv, o, elapsed)});
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            print!("{}", o.text);
            if !o.text.is_empty() && !o.text.ends_with('\n') {
                println!();
            }
            println!("--");
            println!("command: {}", argv.join(" "));
            for (path, hash) in &o.inputs {
                println!("input: {path} sha256={hash}");
            }
            if let Some(n) = o.n {
                println!("n: {n}");
            }
            if let Some(d) = &o.d {
                println!("d: {}", d.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
            }
            if let Some(b) = o.degree_bound {
                println!("degree bound: {b}");
            }
            println!("elapsed: {:.3}s", elapsed.as_secs_f64());
            for (name, v) in &o.verdicts {
                println!("verdict {name}: {}", if *v { "pass" } else { "fail" });
            }
        }
    }
}
