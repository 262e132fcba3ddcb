// Copyright 2026 The paritysynth Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Command-line workflows for paritysynth: single-instance synthesis,
//! routing and verification, and seeded sweeps that emit JSON-line records.

pub mod args;
mod commands;
pub mod stats;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use paritysynth::graph::graph_family;
use paritysynth::io::{parse_graph, parse_phase_poly, parse_qasm};
use paritysynth::{Circuit, CouplingGraph, PhasePolynomial};
use serde::Serialize;

pub use args::{Cli, Command, Format};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a produced circuit fails an oracle check.
pub const EXIT_VERIFY: i32 = 1;
/// Exit status for unreadable or inconsistent input.
pub const EXIT_INPUT: i32 = 2;

/// Environment variable capping the worker pool used by sweeps.
pub const THREADS_VAR: &str = "PARITYSYNTH_THREADS";

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verify(_) => EXIT_VERIFY,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<paritysynth::Error> for CliError {
    fn from(e: paritysynth::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// The parsed invocation, written at the head of every record stream.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub subcommand: &'static str,
    pub args: serde_json::Value,
}

impl RunConfig {
    pub fn new(subcommand: &'static str, args: &impl Serialize) -> Self {
        Self {
            subcommand,
            args: serde_json::to_value(args).expect("argument structs serialize"),
        }
    }

    /// `{"run_config": {...}}` on one line.
    pub fn to_line(&self) -> String {
        serde_json::json!({ "run_config": self }).to_string()
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match commands::dispatch(&cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

pub(crate) fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads a graph file when `desc` names an existing file, otherwise builds
/// the family shorthand.
pub fn load_graph(desc: &str) -> CliResult<CouplingGraph> {
    let path = Path::new(desc);
    if path.is_file() {
        let text = read_file(path)?;
        return parse_graph(&text).map_err(|e| CliError::Input(format!("{}:{e}", path.display())));
    }
    Ok(graph_family(desc)?)
}

pub enum Input {
    Poly(PhasePolynomial),
    Circuit(Circuit),
}

fn looks_like_qasm(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "qasm")
        || text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with("//"))
            .is_some_and(|l| l.starts_with("OPENQASM"))
}

/// Reads an OpenQASM circuit or a polynomial file, chosen by extension or
/// by an `OPENQASM` header.
pub fn load_input(path: &Path) -> CliResult<Input> {
    let text = read_file(path)?;
    let located = |e: paritysynth::ParseError| CliError::Input(format!("{}:{e}", path.display()));
    if looks_like_qasm(path, &text) {
        parse_qasm(&text).map(Input::Circuit).map_err(located)
    } else {
        parse_phase_poly(&text).map(Input::Poly).map_err(located)
    }
}

/// Runs `f` on a pool capped by `PARITYSYNTH_THREADS` when it is set.
pub(crate) fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> CliResult<R> {
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Input(format!("{THREADS_VAR} must be a thread count, got `{v}`")))?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(pool.install(f))
}
