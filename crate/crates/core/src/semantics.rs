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

//! Exact semantics of circuits: path-sum extraction with phase folding,
//! equivalence checking, connectivity checking and dense simulation.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::angle::Angle;
use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;
use crate::linear::LinearFunction;
use crate::poly::PhasePolynomial;

/// Largest register the dense simulator accepts.
pub const MAX_SIM_QUBITS: usize = 12;

/// Wire parities plus the phase accumulated on each parity so far.
#[derive(Debug, Clone)]
pub struct PathSumState {
    pub wire_parities: Vec<BitVec>,
    pub phase_table: BTreeMap<BitVec, Angle>,
}

impl PathSumState {
    pub fn new(n: usize) -> Self {
        Self {
            wire_parities: (0..n).map(|i| BitVec::unit(n, i)).collect(),
            phase_table: BTreeMap::new(),
        }
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        match *gate {
            Gate::Cnot { control, target } => {
                let c = self.wire_parities[control].clone();
                self.wire_parities[target] ^= &c;
            }
            Gate::Rz { angle, qubit } => {
                let p = self.wire_parities[qubit].clone();
                let slot = self.phase_table.entry(p).or_insert(Angle::ZERO);
                *slot = *slot + angle;
            }
            Gate::H(_) => return Err(Error::UnsupportedGate("h")),
            Gate::Swap(..) => return Err(Error::UnsupportedGate("swap")),
        }
        Ok(())
    }

    /// Folded polynomial (zero angles purged) and the final linear map.
    pub fn finish(self) -> (PhasePolynomial, LinearFunction) {
        let n = self.wire_parities.len();
        let poly = PhasePolynomial::new(n, self.phase_table)
            .expect("wire parities have the register width");
        let linear = LinearFunction::from_rows(self.wire_parities)
            .expect("CNOT circuits are invertible");
        (poly, linear)
    }
}

/// The phase polynomial and residual linear function of a CNOT+Rz circuit.
pub fn extract(circuit: &Circuit) -> Result<(PhasePolynomial, LinearFunction)> {
    let mut state = PathSumState::new(circuit.num_qubits());
    for g in circuit.gates() {
        state.apply(g)?;
    }
    Ok(state.finish())
}

/// Whether two CNOT+Rz circuits implement the same unitary up to global phase.
pub fn equivalent(a: &Circuit, b: &Circuit) -> Result<bool> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::Dimension {
            expected: a.num_qubits(),
            got: b.num_qubits(),
        });
    }
    Ok(extract(a)? == extract(b)?)
}

/// Whether `circuit` implements `poly` with an identity linear part.
pub fn implements(circuit: &Circuit, poly: &PhasePolynomial) -> Result<bool> {
    let (p, f) = extract(circuit)?;
    Ok(&p == poly && f.is_identity())
}

/// Every two-qubit gate whose operands are not adjacent in `graph`, as
/// `(gate index, (a, b))`.
pub fn check_connectivity(circuit: &Circuit, graph: &CouplingGraph) -> Vec<(usize, (usize, usize))> {
    circuit
        .gates()
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.pair().map(|p| (i, p)))
        .filter(|&(_, (a, b))| !graph.has_edge(a, b))
        .collect()
}

/// Dense simulation of `circuit` on the computational basis state `input`.
/// Qubit `i` is bit `i` of the basis index.
pub fn statevector_sim(circuit: &Circuit, input: usize) -> Result<Vec<Complex64>> {
    let n = circuit.num_qubits();
    if n > MAX_SIM_QUBITS {
        return Err(Error::Capacity {
            n,
            max: MAX_SIM_QUBITS,
        });
    }
    let dim = 1usize << n;
    if input >= dim {
        return Err(Error::QubitOutOfRange { qubit: input, n: dim });
    }
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    psi[input] = Complex64::new(1.0, 0.0);
    for g in circuit.gates() {
        apply_dense(&mut psi, g);
    }
    Ok(psi)
}

fn apply_dense(psi: &mut [Complex64], gate: &Gate) {
    match *gate {
        Gate::Cnot { control, target } => {
            let (c, t) = (1 << control, 1 << target);
            for i in 0..psi.len() {
                if i & c != 0 && i & t == 0 {
                    psi.swap(i, i | t);
                }
            }
        }
        Gate::Swap(a, b) => {
            let (a, b) = (1 << a, 1 << b);
            for i in 0..psi.len() {
                if i & a != 0 && i & b == 0 {
                    psi.swap(i, (i & !a) | b);
                }
            }
        }
        Gate::Rz { angle, qubit } => {
            let half = angle.radians() / 2.0;
            let lo = Complex64::from_polar(1.0, -half);
            let hi = Complex64::from_polar(1.0, half);
            let m = 1 << qubit;
            for (i, a) in psi.iter_mut().enumerate() {
                *a *= if i & m == 0 { lo } else { hi };
            }
        }
        Gate::H(q) => {
            let m = 1 << q;
            for i in 0..psi.len() {
                if i & m == 0 {
                    let (x, y) = (psi[i], psi[i | m]);
                    psi[i] = (x + y) * FRAC_1_SQRT_2;
                    psi[i | m] = (x - y) * FRAC_1_SQRT_2;
                }
            }
        }
    }
}

/// Compares the full unitaries of two circuits column by column, allowing a
/// single global phase and an absolute error of `tol` per amplitude.
pub fn unitary_equivalent(a: &Circuit, b: &Circuit, tol: f64) -> Result<bool> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::Dimension {
            expected: a.num_qubits(),
            got: b.num_qubits(),
        });
    }
    let dim = 1usize << a.num_qubits().min(MAX_SIM_QUBITS + 1);
    let mut phase: Option<Complex64> = None;
    for input in 0..dim {
        let u = statevector_sim(a, input)?;
        let v = statevector_sim(b, input)?;
        if phase.is_none() {
            let (k, _) = u
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
                .expect("nonempty state");
            if v[k].norm() < 1e-12 {
                return Ok(false);
            }
            let r = u[k] / v[k];
            phase = Some(r / r.norm());
        }
        let ph = phase.unwrap();
        if u.iter().zip(&v).any(|(x, y)| (x - y * ph).norm() > tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_4, PI};

    use super::*;
    use crate::poly::ParityMatrix;

    fn circ(n: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(n, gates).unwrap()
    }

    #[test]
    fn zz_ladder() {
        let c = circ(2, vec![Gate::cnot(0, 1), Gate::rz(0.3, 1), Gate::cnot(0, 1)]);
        let (p, f) = extract(&c).unwrap();
        assert_eq!(p, PhasePolynomial::new(2, [(BitVec::parse("11").unwrap(), 0.3)]).unwrap());
        assert!(f.is_identity());
    }

    #[test]
    fn rz_folding() {
        let c = circ(3, vec![Gate::rz(0.2, 0), Gate::rz(0.5, 0)]);
        let (p, f) = extract(&c).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].parity, BitVec::parse("100").unwrap());
        assert_eq!(p.terms()[0].angle, Angle::new(0.7));
        assert!(f.is_identity());
    }

    #[test]
    fn cancelling_rotations_leave_nothing() {
        let c = circ(1, vec![Gate::rz(PI, 0), Gate::rz(PI, 0)]);
        assert!(extract(&c).unwrap().0.is_empty());
    }

    #[test]
    fn rejects_h_and_swap() {
        assert_eq!(
            extract(&circ(1, vec![Gate::H(0)])).unwrap_err(),
            Error::UnsupportedGate("h")
        );
        assert!(extract(&circ(2, vec![Gate::Swap(0, 1)])).is_err());
    }

    #[test]
    fn equivalence_basic() {
        let c = circ(2, vec![Gate::cnot(0, 1), Gate::rz(FRAC_PI_4, 1)]);
        assert!(equivalent(&c, &c).unwrap());
        let empty = Circuit::new(2);
        assert!(!equivalent(&circ(2, vec![Gate::cnot(0, 1)]), &empty).unwrap());
    }

    #[test]
    fn connectivity() {
        let g = CouplingGraph::line(3).unwrap();
        assert!(check_connectivity(&circ(3, vec![Gate::cnot(0, 1)]), &g).is_empty());
        assert_eq!(
            check_connectivity(&circ(3, vec![Gate::cnot(0, 2)]), &g),
            vec![(0, (0, 2))]
        );
    }

    #[test]
    fn simulator_basics() {
        let psi = statevector_sim(&Circuit::new(3), 0).unwrap();
        assert_eq!(psi[0], Complex64::new(1.0, 0.0));
        let psi = statevector_sim(&circ(1, vec![Gate::H(0)]), 0).unwrap();
        assert!((psi[0].re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((psi[1].re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(statevector_sim(&Circuit::new(13), 0).is_err());
    }

    #[test]
    fn swap_equals_three_cnots() {
        let s = circ(3, vec![Gate::H(0), Gate::Swap(0, 2), Gate::rz(0.4, 2)]);
        let e = s.expand_swaps();
        assert!(unitary_equivalent(&s, &e, 1e-9).unwrap());
    }

    #[test]
    fn global_phase_ignored_but_relative_phase_not() {
        // Rz(2pi) is -I
        let a = circ(1, vec![Gate::rz(0.0, 0)]);
        let b = circ(1, vec![Gate::Rz { angle: Angle::new(2.0 * PI - 1e-15), qubit: 0 }]);
        assert!(unitary_equivalent(&a, &b, 1e-7).unwrap());
        let c = circ(2, vec![Gate::rz(0.1, 1)]);
        assert!(!unitary_equivalent(&Circuit::new(2), &c, 1e-7).unwrap());
    }

    #[test]
    fn extract_matches_simulation() {
        let c = circ(
            3,
            vec![
                Gate::cnot(0, 2),
                Gate::rz(0.7, 2),
                Gate::cnot(1, 0),
                Gate::rz(1.1, 0),
                Gate::cnot(2, 1),
            ],
        );
        let (p, f) = extract(&c).unwrap();
        for x in 0..8usize {
            let psi = statevector_sim(&c, x).unwrap();
            let xb = BitVec::from_u64(3, x as u64);
            let y: u64 = (0..3).map(|i| (f.row(i).dot(&xb) as u64) << i).sum();
            let mut phase = 0.0;
            for t in p.terms() {
                let s = if t.parity.dot(&xb) { 1.0 } else { -1.0 };
                phase += s * t.angle.radians() / 2.0;
            }
            let want = Complex64::from_polar(1.0, phase);
            assert!((psi[y as usize] - want).norm() < 1e-9, "input {x}");
        }
    }

    #[test]
    fn row_rule_is_dual_to_wire_rule() {
        let cols = ["110", "011", "111", "001"].map(|s| BitVec::parse(s).unwrap());
        let mut m = ParityMatrix::from_columns(3, cols.clone()).unwrap();
        let cnots = [(0, 1), (2, 0), (1, 2), (0, 2)];
        let mut c = Circuit::new(3);
        for &(a, b) in &cnots {
            m.cnot(a, b).unwrap();
            c.push(Gate::cnot(a, b)).unwrap();
        }
        let (_, f) = extract(&c).unwrap();
        for (j, orig) in cols.iter().enumerate() {
            let mut acc = BitVec::zeros(3);
            for i in m.column(j).iter_ones() {
                acc ^= f.row(i);
            }
            assert_eq!(&acc, orig);
        }
    }
}
