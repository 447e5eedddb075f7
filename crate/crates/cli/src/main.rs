mod cli;
mod corpus;
mod input;
mod render;
mod run;

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use cli::Cli;
use input::InputSpec;
use run::Failure;

/// Everything one invocation writes.
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn failure(f: Failure) -> Self {
        Output { code: f.exit_code(), stdout: String::new(), stderr: f.message() + "\n" }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match cli.input.as_deref() {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

pub fn report(cli: &Cli, stdin: &mut dyn Read) -> Result<Value, Failure> {
    let command = cli
        .command
        .as_ref()
        .ok_or_else(|| Failure::Parse("a command or --seed-corpus is required".into()))?;
    let spec = InputSpec::parse(&read_input(cli, stdin)?).map_err(Failure::Parse)?;
    let start = Instant::now();
    let out = run::execute(command, &spec)?;
    let mut doc = json!({
        "command": out.command,
        "args": out.args,
        "input": spec.echo(),
        "result": out.result,
        "conventions": out.conventions,
    });
    if cli.timing {
        doc["timing"] = json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 });
    }
    Ok(doc)
}

pub fn invoke(cli: &Cli, stdin: &mut dyn Read) -> Output {
    if let Some(dir) = &cli.seed_corpus {
        return corpus::run_corpus(dir);
    }
    match report(cli, stdin) {
        Ok(doc) => Output {
            code: 0,
            stdout: serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n",
            stderr: String::new(),
        },
        Err(f) => Output::failure(f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = invoke(&cli, &mut io::stdin());
    // a closed pipe is not worth reporting
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
