//! Golden cases: each `*.case.json` holds command-line arguments, an
//! input document, the expected exit status and, for successful runs, the
//! expected `result` payload.

use std::path::Path;

use clap::Parser;
use serde_json::{json, Value};

use crate::cli::Cli;
use crate::{invoke, Output};

fn run_case(doc: &Value) -> Result<(), String> {
    let args: Vec<String> = doc["args"]
        .as_array()
        .ok_or("\"args\" must be an array")?
        .iter()
        .map(|a| a.as_str().map(str::to_owned).ok_or("arguments must be strings"))
        .collect::<Result<_, _>>()?;
    let expected_exit = doc["expected_exit"].as_u64().unwrap_or(0) as u8;
    let input = serde_json::to_string(&doc["input"]).expect("values serialize");
    let code = match Cli::try_parse_from(std::iter::once("zonotopal".to_string()).chain(args)) {
        Err(_) => 2,
        Ok(cli) => {
            let out = invoke(&cli, &mut input.as_bytes());
            if out.code == 0 {
                let report: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
                if let Some(expected) = doc.get("expected") {
                    if &report["result"] != expected {
                        return Err(format!("result differs: got {}", report["result"]));
                    }
                }
            }
            out.code
        }
    };
    if code != expected_exit {
        return Err(format!("exit status {code}, expected {expected_exit}"));
    }
    Ok(())
}

pub fn run_corpus(dir: &Path) -> Output {
    let mut paths: Vec<_> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.to_string_lossy().ends_with(".case.json"))
            .collect(),
        Err(e) => {
            return Output { code: 2, stdout: String::new(), stderr: format!("cannot read {}: {e}\n", dir.display()) };
        }
    };
    paths.sort();
    let mut cases = Vec::new();
    let mut all = true;
    for path in &paths {
        let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let outcome = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|t| serde_json::from_str::<Value>(&t).map_err(|e| e.to_string()))
            .and_then(|doc| run_case(&doc));
        all &= outcome.is_ok();
        cases.push(match outcome {
            Ok(()) => json!({ "case": name, "passed": true }),
            Err(why) => json!({ "case": name, "passed": false, "reason": why }),
        });
    }
    let doc = json!({ "command": "seed-corpus", "passed": all, "cases": cases });
    let stdout = serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n";
    if all {
        Output { code: 0, stdout, stderr: String::new() }
    } else {
        Output { code: 4, stdout: String::new(), stderr: stdout }
    }
}
