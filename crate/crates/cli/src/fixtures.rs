//! Golden fixtures: stored command lines with their expected output, replayed
//! in-process and compared byte for byte.

use std::io::Write;

use clap::Parser;
use serde::Deserialize;
use serde_json::json;

use crate::args::{Cli, Command, ReproArgs};
use crate::commands::{run, Failure, EXIT_VIOLATION};

pub const BUILTIN: &str = include_str!("../fixtures/golden.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub anchor: String,
    pub command: Vec<String>,
    pub expected: String,
    #[serde(default)]
    pub exit: i32,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit: i32,
    pub output: String,
}

pub fn load(text: &str) -> Result<Vec<Fixture>, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("bad fixture store: {e}")))
}

pub fn execute(f: &Fixture) -> Outcome {
    let argv = std::iter::once("splice".to_string()).chain(f.command.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return Outcome {
                exit: 2,
                output: e.to_string(),
            }
        }
    };
    if matches!(cli.command, Command::Repro(_)) {
        return Outcome {
            exit: 2,
            output: "fixtures may not call repro".into(),
        };
    }
    let mut buf = Vec::new();
    let exit = match run(&cli, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            buf.extend_from_slice(e.message().as_bytes());
            e.exit_code()
        }
    };
    Outcome {
        exit,
        output: String::from_utf8_lossy(&buf).trim_end().to_string(),
    }
}

pub fn cmd_repro(cli: &Cli, a: &ReproArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match &a.fixtures {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => BUILTIN.to_string(),
    };
    let fixtures = load(&text)?;
    let w = |out: &mut dyn Write, s: String| {
        writeln!(out, "{s}").map_err(|e| Failure::Usage(format!("write failed: {e}")))
    };

    if a.list {
        if cli.json {
            let items: Vec<_> = fixtures
                .iter()
                .map(|f| json!({ "id": f.id, "anchor": f.anchor }))
                .collect();
            w(out, json!(items).to_string())?;
        } else {
            for f in &fixtures {
                w(out, format!("{}\t{}", f.id, f.anchor))?;
            }
        }
        return Ok(0);
    }

    let mut first_failure: Option<String> = None;
    let mut rows = Vec::new();
    for f in &fixtures {
        let got = execute(f);
        let ok = got.output == f.expected && got.exit == f.exit;
        if !ok && first_failure.is_none() {
            first_failure = Some(f.id.clone());
        }
        if cli.json {
            rows.push(json!({
                "id": f.id,
                "anchor": f.anchor,
                "passed": ok,
                "expected": f.expected,
                "actual": got.output,
                "exit": got.exit,
            }));
        } else if ok {
            w(out, format!("PASS {}", f.id))?;
        } else {
            w(
                out,
                format!(
                    "FAIL {}: expected {:?} (exit {}), got {:?} (exit {})",
                    f.id, f.expected, f.exit, got.output, got.exit
                ),
            )?;
        }
    }
    if cli.json {
        w(
            out,
            json!({
                "passed": first_failure.is_none(),
                "fixtures": rows,
                "first_failure": first_failure,
            })
            .to_string(),
        )?;
    } else {
        match &first_failure {
            None => w(out, format!("all {} fixtures match", fixtures.len()))?,
            Some(id) => w(out, format!("first mismatch: {id}"))?,
        }
    }
    Ok(if first_failure.is_none() {
        0
    } else {
        EXIT_VIOLATION
    })
}
