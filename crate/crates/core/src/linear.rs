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

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// An invertible GF(2) linear map, stored as the parity each wire holds:
/// row `i` is the set of input qubits whose XOR sits on wire `i`.
///
/// CNOT(c, t) acts as `row[t] ^= row[c]`. This is the dual of the
/// parity-matrix rule, where the target row is added to the control row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFunction {
    rows: Vec<BitVec>,
}

impl LinearFunction {
    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    /// Validates shape and invertibility.
    pub fn from_rows(rows: Vec<BitVec>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                got: r.len(),
            });
        }
        let f = Self { rows };
        if f.rank() != n {
            return Err(Error::Singular);
        }
        Ok(f)
    }

    /// Parses rows written as bit strings, e.g. `["11", "01"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| BitVec::parse(s).ok_or(Error::InvalidMatrix(format!("bad row `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// The map implemented by the CNOT and SWAP gates of `circuit`; other gates are skipped.
    pub fn from_circuit(circuit: &Circuit) -> Self {
        let mut f = Self::identity(circuit.num_qubits());
        f.apply_circuit(circuit);
        f
    }

    pub fn num_qubits(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.get(i) && r.count_ones() == 1)
    }

    /// `row[target] ^= row[control]`.
    pub fn cnot(&mut self, control: usize, target: usize) {
        assert_ne!(control, target);
        let c = self.rows[control].clone();
        self.rows[target] ^= &c;
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    pub fn apply_circuit(&mut self, circuit: &Circuit) {
        for g in circuit.gates() {
            match *g {
                Gate::Cnot { control, target } => self.cnot(control, target),
                Gate::Swap(a, b) => self.swap(a, b),
                _ => {}
            }
        }
    }

    pub fn rank(&self) -> usize {
        gf2_rank(self.rows.clone())
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &LinearFunction) -> LinearFunction {
        let n = self.rows.len();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVec::zeros(n);
                for k in r.iter_ones() {
                    acc ^= &other.rows[k];
                }
                acc
            })
            .collect();
        LinearFunction { rows }
    }

    pub fn inverse(&self) -> LinearFunction {
        let n = self.rows.len();
        let mut a = self.rows.clone();
        let mut inv = LinearFunction::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r].get(col))
                .expect("linear function is invertible");
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r].get(col) {
                    let (ar, ir) = (a[col].clone(), inv[col].clone());
                    a[r] ^= &ar;
                    inv[r] ^= &ir;
                }
            }
        }
        LinearFunction { rows: inv }
    }
}

/// Rank over GF(2) of a set of row vectors.
pub fn gf2_rank(mut rows: Vec<BitVec>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len());
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r].get(col) {
                rows[r] ^= &pivot;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot_acts_on_wires() {
        let mut f = LinearFunction::identity(2);
        f.cnot(1, 0);
        assert_eq!(f, LinearFunction::from_strs(&["11", "01"]).unwrap());
        f.cnot(1, 0);
        assert!(f.is_identity());
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(
            LinearFunction::from_strs(&["11", "11"]).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn inverse_and_product() {
        let f = LinearFunction::from_strs(&["110", "011", "001"]).unwrap();
        assert!(f.matmul(&f.inverse()).is_identity());
        assert!(f.inverse().matmul(&f).is_identity());
    }
}
