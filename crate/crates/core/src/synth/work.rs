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

//! Mutable synthesis state shared by the strategies that work on the
//! parity matrix as a whole.

use crate::angle::Angle;
use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::graph::CouplingGraph;
use crate::linear::LinearFunction;
use crate::poly::{ParityMatrix, PhasePolynomial};
use crate::synth::linear::{constrained_reduce, reduce_to_identity, RowOp};

/// Parity matrix in the basis of the current wire values, together with the
/// circuit emitted so far. A column is realized, and its Rz emitted, as soon
/// as it becomes a unit vector.
#[derive(Clone)]
pub(crate) struct Work {
    pub n: usize,
    pub rows: Vec<BitVec>,
    pub angles: Vec<Angle>,
    pub live: BitVec,
    pub wires: LinearFunction,
    pub circuit: Circuit,
    pub forward: Vec<RowOp>,
}

impl Work {
    pub fn new(poly: &PhasePolynomial) -> Self {
        let m = poly.parity_matrix();
        let mut w = Self::from_matrix(&m);
        w.angles = poly.angles();
        w
    }

    pub fn from_matrix(m: &ParityMatrix) -> Self {
        let n = m.num_rows();
        let g = m.num_cols();
        Self {
            n,
            rows: (0..n).map(|i| m.row(i).clone()).collect(),
            angles: vec![Angle::ZERO; g],
            live: BitVec::ones(g),
            wires: LinearFunction::identity(n),
            circuit: Circuit::new(n),
            forward: Vec::new(),
        }
    }

    pub fn has_live(&self) -> bool {
        !self.live.is_zero()
    }

    fn unit_wire(&self, j: usize) -> Option<usize> {
        let mut found = None;
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn realize(&mut self, candidates: &BitVec) {
        for j in candidates.iter_ones() {
            if let Some(i) = self.unit_wire(j) {
                self.live.set(j, false);
                self.circuit.push_unchecked(Gate::Rz {
                    angle: self.angles[j],
                    qubit: i,
                });
            }
        }
    }

    pub fn realize_all(&mut self) {
        let live = self.live.clone();
        self.realize(&live);
    }

    /// Row rule: `row[control] ^= row[target]`.
    pub fn cnot(&mut self, control: usize, target: usize) {
        let t = self.rows[target].clone();
        self.rows[control] ^= &t;
        self.wires.cnot(control, target);
        self.circuit.push_unchecked(Gate::cnot(control, target));
        self.forward.push((control, target));
        let changed = t.and(&self.live);
        self.realize(&changed);
    }

    /// Live columns of the current matrix, for callers that hand it back.
    pub fn live_matrix(&self) -> ParityMatrix {
        let cols: Vec<BitVec> = self
            .live
            .iter_ones()
            .map(|j| BitVec::from_indices(self.n, (0..self.n).filter(|&i| self.rows[i].get(j))))
            .collect();
        ParityMatrix::from_columns_unchecked(self.n, &cols)
    }

    /// Appends a linear tail so that the whole circuit implements `target`,
    /// choosing the cheaper of re-synthesis and reversing the forward CNOTs.
    /// Returns the number of CNOTs added.
    pub fn finish(&mut self, target: &LinearFunction, graph: Option<&CouplingGraph>) -> usize {
        let reduce = |f: &LinearFunction| -> Vec<RowOp> {
            match graph {
                Some(g) => constrained_reduce(f, g).expect("invertible"),
                None => reduce_to_identity(f).expect("invertible"),
            }
        };
        let direct = if target.is_identity() {
            reduce(&self.wires)
        } else {
            // reducing wires * target^-1 yields a circuit for target * wires^-1
            reduce(&self.wires.matmul(&target.inverse()))
        };
        let mut undo: Vec<RowOp> = self.forward.iter().rev().copied().collect();
        if !target.is_identity() {
            undo.extend(reduce(target).into_iter().rev());
        }
        let tail = if undo.len() <= direct.len() { undo } else { direct };
        let added = tail.len();
        for (c, t) in tail {
            self.wires.cnot(c, t);
            self.circuit.push_unchecked(Gate::cnot(c, t));
        }
        debug_assert_eq!(&self.wires, target);
        added
    }

    pub fn into_circuit(self) -> Circuit {
        cancel_adjacent_cnots(self.circuit)
    }
}

/// Removes pairs of identical CNOTs that are adjacent in gate order.
pub fn cancel_adjacent_cnots(circuit: Circuit) -> Circuit {
    let mut out: Vec<Gate> = Vec::with_capacity(circuit.len());
    for &g in circuit.gates() {
        if matches!(g, Gate::Cnot { .. }) && out.last() == Some(&g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    let mut c = Circuit::new(circuit.num_qubits());
    for g in out {
        c.push_unchecked(g);
    }
    c
}
