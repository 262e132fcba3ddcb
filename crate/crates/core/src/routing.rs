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

//! SWAP-based routing of an already synthesized circuit onto a coupling
//! graph, and the resulting overhead factor.

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;

#[derive(Debug, Clone)]
pub struct RoutingReport {
    /// Circuit on physical qubits, with SWAP gates left unexpanded.
    pub routed_circuit: Circuit,
    /// CNOT count of the routed circuit with each SWAP counted as three.
    pub c_routed: usize,
    pub c_baseline: usize,
    pub alpha: f64,
    pub swaps_inserted: usize,
    /// `final_mapping[logical] = physical` after the last gate.
    pub final_mapping: Vec<usize>,
}

/// `c_routed / c_baseline`.
pub fn overhead_factor(c_routed: usize, c_baseline: usize) -> Result<f64> {
    if c_baseline == 0 {
        return Err(Error::ZeroBaseline);
    }
    Ok(c_routed as f64 / c_baseline as f64)
}

fn check_mapping(mapping: &[usize], n: usize) -> Result<()> {
    if mapping.len() != n {
        return Err(Error::NotBijective(mapping.len()));
    }
    let mut seen = vec![false; n];
    for &p in mapping {
        if p >= n || seen[p] {
            return Err(Error::NotBijective(p));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Greedy router: a CNOT whose operands sit on non-adjacent physical qubits
/// has its control swapped along a shortest path until it neighbours the
/// target. `mapping[logical] = physical` gives the initial placement.
///
/// The baseline is the CNOT count of the input; when the input has no CNOTs
/// the factor is reported as 1.
pub fn route_swaps(circuit: &Circuit, graph: &CouplingGraph, mapping: &[usize]) -> Result<RoutingReport> {
    let n = circuit.num_qubits();
    if graph.num_vertices() != n {
        return Err(Error::Dimension {
            expected: n,
            got: graph.num_vertices(),
        });
    }
    check_mapping(mapping, n)?;
    let mut l2p = mapping.to_vec();
    let mut p2l = vec![0; n];
    for (l, &p) in l2p.iter().enumerate() {
        p2l[p] = l;
    }
    let mut out = Circuit::new(n);
    let mut swaps = 0;
    for g in circuit.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                let (pc, pt) = (l2p[control], l2p[target]);
                if !graph.has_edge(pc, pt) {
                    let path = graph.shortest_path(pc, pt)?;
                    for w in path[..path.len() - 1].windows(2) {
                        let (a, b) = (w[0], w[1]);
                        out.push_unchecked(Gate::Swap(a, b));
                        swaps += 1;
                        let (la, lb) = (p2l[a], p2l[b]);
                        p2l.swap(a, b);
                        l2p[la] = b;
                        l2p[lb] = a;
                    }
                }
                out.push_unchecked(Gate::cnot(l2p[control], l2p[target]));
            }
            Gate::Rz { angle, qubit } => out.push_unchecked(Gate::Rz {
                angle,
                qubit: l2p[qubit],
            }),
            Gate::H(q) => out.push_unchecked(Gate::H(l2p[q])),
            Gate::Swap(..) => return Err(Error::UnsupportedGate("swap")),
        }
    }
    let c_baseline = circuit.cnot_count();
    let c_routed = out.cnot_count();
    let alpha = if c_baseline == 0 {
        1.0
    } else {
        overhead_factor(c_routed, c_baseline)?
    };
    Ok(RoutingReport {
        routed_circuit: out,
        c_routed,
        c_baseline,
        alpha,
        swaps_inserted: swaps,
        final_mapping: l2p,
    })
}

/// Identity placement `[0, 1, …, n-1]`.
pub fn identity_mapping(n: usize) -> Vec<usize> {
    (0..n).collect()
}
