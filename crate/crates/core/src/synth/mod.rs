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

//! Phase-polynomial synthesis strategies and their reports.

mod constrained;
pub mod linear;
mod unconstrained;
pub(crate) mod work;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;
use crate::linear::LinearFunction;
use crate::poly::PhasePolynomial;
use crate::semantics::check_connectivity;

pub use constrained::{
    disconnect_qubit_dfs, synth_constrained_dfs, synth_steiner_naive, DfsDisconnect,
};
pub use linear::{synth_linear, synth_linear_constrained};
pub use unconstrained::{disconnect_qubit, synth_naive, synth_recursive, Disconnect};
pub use work::cancel_adjacent_cnots;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Independent CNOT ladder per term.
    Naive,
    /// Recursive splitting on all-to-all connectivity.
    Recursive,
    /// Independent Steiner-tree ladder per term, on the coupling graph.
    Steiner,
    /// Qubit-by-qubit elimination over spanning trees of the coupling graph.
    Dfs,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Naive,
        Strategy::Recursive,
        Strategy::Steiner,
        Strategy::Dfs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Recursive => "recursive",
            Strategy::Steiner => "steiner",
            Strategy::Dfs => "dfs",
        }
    }

    pub fn is_constrained(self) -> bool {
        matches!(self, Strategy::Steiner | Strategy::Dfs)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct SynthesisReport {
    pub circuit: Circuit,
    pub cnots: usize,
    pub depth: usize,
    pub strategy: Strategy,
    /// CNOTs spent on each term, for the strategies that treat terms independently.
    pub per_term_cnots: Option<Vec<usize>>,
    /// CNOTs in the linear tail that restores the target linear function.
    pub cleanup_cnots: usize,
}

impl SynthesisReport {
    pub(crate) fn new(
        circuit: Circuit,
        strategy: Strategy,
        per_term_cnots: Option<Vec<usize>>,
        cleanup_cnots: usize,
    ) -> Self {
        Self {
            cnots: circuit.cnot_count(),
            depth: circuit.cnot_depth(),
            circuit,
            strategy,
            per_term_cnots,
            cleanup_cnots,
        }
    }
}

/// Cost of one qubit-disconnect pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectStats {
    pub qubit: usize,
    pub cnots: usize,
    pub splits: usize,
}

#[derive(Debug, Clone)]
pub struct ConstrainedReport {
    pub synthesis: SynthesisReport,
    pub graph_id: String,
    pub violations: usize,
    pub splits: usize,
    /// Largest number of CNOTs spent on a single split.
    pub cnots_per_split_max: usize,
    pub disconnects: Vec<DisconnectStats>,
}

impl ConstrainedReport {
    pub(crate) fn new(
        synthesis: SynthesisReport,
        graph: &CouplingGraph,
        disconnects: Vec<DisconnectStats>,
        cnots_per_split_max: usize,
    ) -> Self {
        let violations = check_connectivity(&synthesis.circuit, graph).len();
        Self {
            graph_id: format!("n{}m{}", graph.num_vertices(), graph.num_edges()),
            violations,
            splits: disconnects.iter().map(|d| d.splits).sum(),
            cnots_per_split_max,
            disconnects,
            synthesis,
        }
    }
}

/// Output of [`synthesize`]: constrained strategies carry the extra accounting.
#[derive(Debug, Clone)]
pub enum Report {
    Unconstrained(SynthesisReport),
    Constrained(ConstrainedReport),
}

impl Report {
    pub fn synthesis(&self) -> &SynthesisReport {
        match self {
            Report::Unconstrained(r) => r,
            Report::Constrained(r) => &r.synthesis,
        }
    }

    pub fn circuit(&self) -> &Circuit {
        &self.synthesis().circuit
    }

    pub fn cnots(&self) -> usize {
        self.synthesis().cnots
    }

    pub fn constrained(&self) -> Option<&ConstrainedReport> {
        match self {
            Report::Constrained(r) => Some(r),
            Report::Unconstrained(_) => None,
        }
    }
}

pub(crate) fn check_sizes(poly: &PhasePolynomial, graph: &CouplingGraph) -> Result<()> {
    if graph.num_vertices() != poly.num_qubits() {
        return Err(Error::Dimension {
            expected: poly.num_qubits(),
            got: graph.num_vertices(),
        });
    }
    Ok(())
}

/// Runs `strategy` on `poly`. Constrained strategies use `graph`, or the
/// complete graph when none is given; unconstrained strategies ignore it.
pub fn synthesize(
    poly: &PhasePolynomial,
    strategy: Strategy,
    graph: Option<&CouplingGraph>,
) -> Result<Report> {
    synthesize_to(poly, strategy, graph, &LinearFunction::identity(poly.num_qubits()))
}

/// Like [`synthesize`], but the emitted circuit implements `target` as its
/// linear part instead of the identity.
pub fn synthesize_to(
    poly: &PhasePolynomial,
    strategy: Strategy,
    graph: Option<&CouplingGraph>,
    target: &LinearFunction,
) -> Result<Report> {
    if target.num_qubits() != poly.num_qubits() {
        return Err(Error::Dimension {
            expected: poly.num_qubits(),
            got: target.num_qubits(),
        });
    }
    let complete;
    let graph = match graph {
        Some(g) => g,
        None if strategy.is_constrained() => {
            complete = CouplingGraph::complete(poly.num_qubits().max(1))?;
            &complete
        }
        None => return unconstrained_to(poly, strategy, target),
    };
    match strategy {
        Strategy::Steiner => constrained::steiner_to(poly, graph, target).map(Report::Constrained),
        Strategy::Dfs => constrained::dfs_to(poly, graph, target).map(Report::Constrained),
        _ => unconstrained_to(poly, strategy, target),
    }
}

fn unconstrained_to(
    poly: &PhasePolynomial,
    strategy: Strategy,
    target: &LinearFunction,
) -> Result<Report> {
    match strategy {
        Strategy::Naive => unconstrained::naive_to(poly, target),
        _ => unconstrained::recursive_to(poly, target),
    }
    .map(Report::Unconstrained)
}
