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

use crate::angle::Angle;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    Cnot { control: usize, target: usize },
    Rz { angle: Angle, qubit: usize },
    H(usize),
    Swap(usize, usize),
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn rz(angle: impl Into<Angle>, qubit: usize) -> Self {
        Gate::Rz {
            angle: angle.into(),
            qubit,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::Cnot { .. } => "cx",
            Gate::Rz { .. } => "rz",
            Gate::H(_) => "h",
            Gate::Swap(..) => "swap",
        }
    }

    /// Both operands of a two-qubit gate.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match *self {
            Gate::Cnot { control, target } => Some((control, target)),
            Gate::Swap(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Swap(a, b) => vec![a, b],
            Gate::Rz { qubit, .. } | Gate::H(qubit) => vec![qubit],
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        for q in self.qubits() {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q, n });
            }
        }
        if let Some((a, b)) = self.pair() {
            if a == b {
                return Err(Error::EqualOperands(a));
            }
        }
        Ok(())
    }
}

/// An ordered gate list on `n` wires.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Self::new(n);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Pushes a gate the caller has already validated.
    pub(crate) fn push_unchecked(&mut self, gate: Gate) {
        debug_assert!(gate.validate(self.n).is_ok(), "{gate:?}");
        self.gates.push(gate);
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.n != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn cnot_count(&self) -> usize {
        cnot_count(self)
    }

    pub fn cnot_depth(&self) -> usize {
        cnot_depth(self)
    }

    /// Replaces every SWAP with three CNOTs.
    pub fn expand_swaps(&self) -> Circuit {
        let mut out = Circuit::new(self.n);
        for &g in &self.gates {
            match g {
                Gate::Swap(a, b) => {
                    out.gates.push(Gate::cnot(a, b));
                    out.gates.push(Gate::cnot(b, a));
                    out.gates.push(Gate::cnot(a, b));
                }
                g => out.gates.push(g),
            }
        }
        out
    }

    /// The CNOT subsequence as (control, target) pairs, with SWAPs expanded.
    pub fn cnot_pairs(&self) -> Vec<(usize, usize)> {
        self.expand_swaps()
            .gates
            .iter()
            .filter_map(|g| match *g {
                Gate::Cnot { control, target } => Some((control, target)),
                _ => None,
            })
            .collect()
    }

    pub fn count_kind(&self, name: &str) -> usize {
        self.gates.iter().filter(|g| g.name() == name).count()
    }
}

/// CNOT count with each SWAP counted as three CNOTs.
pub fn cnot_count(circuit: &Circuit) -> usize {
    circuit
        .gates
        .iter()
        .map(|g| match g {
            Gate::Cnot { .. } => 1,
            Gate::Swap(..) => 3,
            _ => 0,
        })
        .sum()
}

/// Greedy ASAP layering of the two-qubit gates; single-qubit gates are free.
pub fn cnot_depth(circuit: &Circuit) -> usize {
    let mut level = vec![0usize; circuit.n];
    let mut depth = 0;
    for g in &circuit.gates {
        let (a, b, cost) = match *g {
            Gate::Cnot { control, target } => (control, target, 1),
            Gate::Swap(a, b) => (a, b, 3),
            _ => continue,
        };
        let l = level[a].max(level[b]) + cost;
        level[a] = l;
        level[b] = l;
        depth = depth.max(l);
    }
    depth
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1), Gate::rz(1.0, 1), Gate::cnot(0, 1)])
            .unwrap();
        assert_eq!(cnot_count(&c), 2);
        let s = Circuit::from_gates(2, [Gate::Swap(0, 1)]).unwrap();
        assert_eq!(cnot_count(&s), 3);
        assert_eq!(cnot_count(&Circuit::new(3)), 0);
        assert_eq!(s.expand_swaps().len(), 3);
    }

    #[test]
    fn depth_layers() {
        let c = Circuit::from_gates(4, [Gate::cnot(0, 1), Gate::cnot(2, 3)]).unwrap();
        assert_eq!(cnot_depth(&c), 1);
        let c = Circuit::from_gates(4, [Gate::cnot(0, 1), Gate::cnot(1, 2)]).unwrap();
        assert_eq!(cnot_depth(&c), 2);
        // eight CNOTs on four qubits need at least 8 / 2 layers
        let pairs = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2), (0, 1), (2, 3)];
        let c = Circuit::from_gates(4, pairs.iter().map(|&(a, b)| Gate::cnot(a, b))).unwrap();
        assert_eq!(cnot_depth(&c), 4);
    }

    #[test]
    fn invalid_operands() {
        let mut c = Circuit::new(2);
        assert_eq!(c.push(Gate::cnot(1, 1)), Err(Error::EqualOperands(1)));
        assert!(c.push(Gate::H(2)).is_err());
        assert!(c.push(Gate::Swap(0, 1)).is_ok());
    }
}
