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

mod single;
mod sweep;

use std::io::Write;
use std::path::Path;

use paritysynth::io::{emit_records, emit_table, Record};
use paritysynth::semantics::{equivalent, unitary_equivalent};
use paritysynth::{same_segmentation, Circuit, Gate};

use crate::args::{Command, Format};
use crate::{CliError, CliResult, RunConfig};

/// Largest register checked with the full statevector oracle.
const STATEVECTOR_QUBITS: usize = 8;

pub(crate) fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Synth(a) => single::synth(a, out, err),
        Command::Route(a) => single::route(a, out, err),
        Command::Verify(a) => single::verify(a, out),
        Command::Compare(a) => sweep::compare(a, out),
        Command::Bench(a) => sweep::bench(a, out),
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Input(e.to_string())
}

/// Writes the record stream: a run-config line then one JSON object per
/// record, or a table.
fn emit_report(
    out: &mut dyn Write,
    format: Format,
    config: &RunConfig,
    records: &[Record],
) -> CliResult<()> {
    let text = match format {
        Format::Records => format!("{}\n{}", config.to_line(), emit_records(records)),
        Format::Table => emit_table(records),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn has_hadamard(c: &Circuit) -> bool {
    c.gates().iter().any(|g| matches!(g, Gate::H(_)))
}

/// Semantic equality of two circuits on the same register. CNOT+Rz circuits
/// are compared by their extracted polynomial and linear part; with
/// Hadamards, small registers use the statevector oracle and larger ones
/// compare segment by segment.
pub(crate) fn same_semantics(a: &Circuit, b: &Circuit) -> CliResult<bool> {
    if a.num_qubits() != b.num_qubits() {
        return Ok(false);
    }
    let (a, b) = (a.expand_swaps(), b.expand_swaps());
    if !has_hadamard(&a) && !has_hadamard(&b) {
        return Ok(equivalent(&a, &b)?);
    }
    if a.num_qubits() <= STATEVECTOR_QUBITS {
        return Ok(unitary_equivalent(&a, &b, 1e-7)?);
    }
    Ok(same_segmentation(&a, &b)?)
}
