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

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "paritysynth", version, about = "Phase-polynomial synthesis and routing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a phase polynomial or resynthesize a QASM circuit.
    Synth(SynthArgs),
    /// Route a QASM circuit onto a coupling graph with SWAPs.
    Route(RouteArgs),
    /// Compare constrained synthesis against synthesis followed by routing.
    Compare(SweepArgs),
    /// Check a circuit against another circuit or a polynomial.
    Verify(VerifyArgs),
    /// Time and count a strategy over a sweep of random instances.
    Bench(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Records,
}

#[derive(Debug, Args, Serialize)]
pub struct SynthArgs {
    /// Polynomial file or OpenQASM file; a random polynomial is drawn from
    /// --n, --g and --seed when absent.
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "recursive")]
    pub strategy: String,
    /// Family shorthand such as `line:16` or a graph file.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    /// Write the circuit here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args, Serialize)]
pub struct RouteArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// OpenQASM circuit under test.
    pub circuit: PathBuf,
    /// Reference circuit (OpenQASM) or polynomial file.
    pub reference: PathBuf,
    /// Also require every CNOT to lie on an edge of this graph.
    #[arg(long)]
    pub graph: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    /// Graph families (`line`, `grid`, ...) sized to each n, or fixed graphs
    /// such as `line:16`.
    #[arg(long, value_delimiter = ',', default_value = "line")]
    pub graph: Vec<String>,
    /// Strategies to run (bench only).
    #[arg(long, value_delimiter = ',', default_value = "dfs")]
    pub strategy: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "8")]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "16")]
    pub g: Vec<usize>,
    /// Number of seeds per (n, g, graph) cell.
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    /// Base seed mixed into every instance seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}
