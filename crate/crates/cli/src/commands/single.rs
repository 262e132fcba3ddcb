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

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use paritysynth::io::{emit_qasm, Record};
use paritysynth::random::seeded_polynomial;
use paritysynth::routing::identity_mapping;
use paritysynth::semantics::{check_connectivity, implements};
use paritysynth::{
    resynthesize, route_swaps, segment, synthesize, synthesize_to, Circuit, Gate, PhasePolynomial,
    Strategy,
};

use super::{emit_report, io_err, same_semantics, write_text};
use crate::args::{RouteArgs, SynthArgs, VerifyArgs};
use crate::{load_graph, load_input, CliError, CliResult, Input, RunConfig};

fn instance_name(path: Option<&Path>, fallback: String) -> String {
    path.and_then(|p| p.file_stem())
        .map_or(fallback, |s| s.to_string_lossy().into_owned())
}

/// Writes `circuit` to `path`, or to `out` when no path is given. Returns
/// whether `out` was used.
fn deliver_circuit(circuit: &Circuit, path: Option<&Path>, out: &mut dyn Write) -> CliResult<bool> {
    let text = emit_qasm(circuit);
    match path {
        Some(p) => write_text(p, &text).map(|_| false),
        None => out.write_all(text.as_bytes()).map(|_| true).map_err(io_err),
    }
}

pub(super) fn synth(a: &SynthArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let strategy: Strategy = a.strategy.parse()?;
    let graph = a.graph.as_deref().map(load_graph).transpose()?;
    let input = match &a.input {
        Some(path) => load_input(path)?,
        None => {
            let (Some(n), Some(g)) = (a.n, a.g) else {
                return Err(CliError::Input("give an input file, or both --n and --g".into()));
            };
            Input::Poly(seeded_polynomial(n, g, a.seed)?)
        }
    };
    let start = Instant::now();
    let (circuit, g_terms, ok) = match &input {
        Input::Poly(p) => {
            let report = synthesize(p, strategy, graph.as_ref())?;
            let c = report.circuit().clone();
            let ok = !a.verify || implements(&c, p)?;
            (c, p.len(), ok)
        }
        Input::Circuit(c) => {
            let seg = segment(c)?;
            let out_c = if seg.num_layers() == 0 {
                let (p, lin) = &seg.segments[0];
                synthesize_to(p, strategy, graph.as_ref(), lin)?.circuit().clone()
            } else {
                resynthesize(c, graph.as_ref(), strategy)?.circuit
            };
            let ok = !a.verify || same_semantics(c, &out_c)?;
            (out_c, seg.total_terms(), ok)
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let violations = graph.as_ref().map_or(0, |g| check_connectivity(&circuit, g).len());
    let n = circuit.num_qubits();
    let record = Record {
        instance: instance_name(a.input.as_deref(), format!("n{n}g{g_terms}s{}", a.seed)),
        seed: a.seed,
        n,
        g: g_terms,
        graph: a.graph.clone().unwrap_or_else(|| "none".into()),
        strategy: strategy.name().into(),
        cnots: circuit.cnot_count(),
        depth: circuit.cnot_depth(),
        alpha: None,
        violations,
        wall_time_ms: elapsed,
    };
    let used_out = deliver_circuit(&circuit, a.out.as_deref(), out)?;
    let report_to: &mut dyn Write = if used_out { err } else { out };
    emit_report(report_to, a.format, &RunConfig::new("synth", a), &[record])?;
    if !ok {
        return Err(CliError::Verify("synthesized circuit differs from its input".into()));
    }
    if a.verify && strategy.is_constrained() && violations > 0 {
        return Err(CliError::Verify(format!("{violations} CNOTs off the coupling graph")));
    }
    Ok(())
}

/// Appends unconstrained SWAPs that bring every logical qubit back to the
/// wire it started on.
pub(crate) fn unpermute(routed: &Circuit, final_mapping: &[usize]) -> Circuit {
    let mut c = routed.expand_swaps();
    let mut l2p = final_mapping.to_vec();
    for l in 0..l2p.len() {
        let p = l2p[l];
        if p != l {
            c.push(Gate::Swap(p, l)).expect("distinct wires in range");
            let other = l2p.iter().position(|&x| x == l).expect("mapping is a bijection");
            l2p.swap(l, other);
        }
    }
    c.expand_swaps()
}

pub(super) fn route(a: &RouteArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let graph = load_graph(&a.graph)?;
    let circuit = match load_input(&a.input)? {
        Input::Circuit(c) => c,
        Input::Poly(_) => return Err(CliError::Input("route needs an OpenQASM circuit".into())),
    };
    let start = Instant::now();
    // input SWAPs are logical gates: route their CNOT expansion
    let r = route_swaps(&circuit.expand_swaps(), &graph, &identity_mapping(circuit.num_qubits()))?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let expanded = r.routed_circuit.expand_swaps();
    let violations = check_connectivity(&expanded, &graph).len();
    let ok = !a.verify || same_semantics(&circuit, &unpermute(&r.routed_circuit, &r.final_mapping))?;
    let record = Record {
        instance: instance_name(Some(&a.input), String::new()),
        seed: 0,
        n: circuit.num_qubits(),
        g: circuit.count_kind("rz"),
        graph: a.graph.clone(),
        strategy: "swap".into(),
        cnots: r.c_routed,
        depth: expanded.cnot_depth(),
        alpha: Some(r.alpha),
        violations,
        wall_time_ms: elapsed,
    };
    let used_out = deliver_circuit(&r.routed_circuit, a.out.as_deref(), out)?;
    let report_to: &mut dyn Write = if used_out { err } else { out };
    emit_report(report_to, a.format, &RunConfig::new("route", a), &[record])?;
    if !ok {
        return Err(CliError::Verify("routed circuit differs from its input".into()));
    }
    if a.verify && violations > 0 {
        return Err(CliError::Verify(format!("{violations} CNOTs off the coupling graph")));
    }
    Ok(())
}

pub(super) fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let circuit = match load_input(&a.circuit)? {
        Input::Circuit(c) => c,
        Input::Poly(_) => return Err(CliError::Input("the first argument must be an OpenQASM circuit".into())),
    };
    let ok = match load_input(&a.reference)? {
        Input::Circuit(r) => same_semantics(&circuit, &r)?,
        Input::Poly(p) => check_against_poly(&circuit, &p)?,
    };
    let violations = match &a.graph {
        Some(desc) => {
            let g = load_graph(desc)?;
            if g.num_vertices() != circuit.num_qubits() {
                return Err(CliError::Input(format!(
                    "graph has {} vertices, circuit has {} qubits",
                    g.num_vertices(),
                    circuit.num_qubits()
                )));
            }
            check_connectivity(&circuit.expand_swaps(), &g).len()
        }
        None => 0,
    };
    if !ok {
        return Err(CliError::Verify("circuits are not equivalent".into()));
    }
    if violations > 0 {
        return Err(CliError::Verify(format!("{violations} CNOTs off the coupling graph")));
    }
    writeln!(out, "ok").map_err(io_err)
}

fn check_against_poly(c: &Circuit, p: &PhasePolynomial) -> CliResult<bool> {
    if c.num_qubits() != p.num_qubits() {
        return Ok(false);
    }
    if c.gates().iter().any(|g| matches!(g, Gate::H(_))) {
        return Err(CliError::Input("a circuit with Hadamards has no single phase polynomial".into()));
    }
    Ok(implements(&c.expand_swaps(), p)?)
}
