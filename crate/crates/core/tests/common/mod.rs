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

#![allow(dead_code)]

use std::f64::consts::TAU;

use paritysynth::{Circuit, Gate, PhasePolynomial};

/// Basis-state simulation of a CNOT+SWAP+Rz circuit: for input `x`, the
/// output basis state and the accumulated phase (radians, Rz(θ) contributing
/// -θ/2 on |0⟩ and +θ/2 on |1⟩).
pub fn classical_run(c: &Circuit, x: u64) -> (u64, f64) {
    let mut s = x;
    let mut phase = 0.0;
    for g in c.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                if s >> control & 1 == 1 {
                    s ^= 1 << target;
                }
            }
            Gate::Swap(a, b) => {
                if (s >> a & 1) != (s >> b & 1) {
                    s ^= (1 << a) | (1 << b);
                }
            }
            Gate::Rz { angle, qubit } => {
                let sign = if s >> qubit & 1 == 1 { 1.0 } else { -1.0 };
                phase += sign * angle.radians() / 2.0;
            }
            Gate::H(_) => panic!("classical_run handles permutation-phase circuits only"),
        }
    }
    (s, phase)
}

/// Phase the polynomial assigns to `x` in the same convention.
pub fn poly_phase(p: &PhasePolynomial, x: u64) -> f64 {
    p.terms()
        .iter()
        .map(|t| {
            let on = (t.parity.to_u64() & x).count_ones() % 2 == 1;
            if on {
                t.angle.radians() / 2.0
            } else {
                -t.angle.radians() / 2.0
            }
        })
        .sum()
}

fn same_mod_tau(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(TAU);
    d < 1e-7 || TAU - d < 1e-7
}

/// Whether `c` maps every basis state to itself with exactly the phase of `p`.
pub fn implements_exactly(c: &Circuit, p: &PhasePolynomial) -> bool {
    let n = c.num_qubits();
    (0..1u64 << n).all(|x| {
        let (y, ph) = classical_run(c, x);
        y == x && same_mod_tau(ph, poly_phase(p, x))
    })
}

/// Whether two permutation-phase circuits agree on every basis state, phases
/// compared up to one global constant.
pub fn same_action(a: &Circuit, b: &Circuit) -> bool {
    let n = a.num_qubits();
    if n != b.num_qubits() {
        return false;
    }
    let mut offset = None;
    (0..1u64 << n).all(|x| {
        let (ya, pa) = classical_run(a, x);
        let (yb, pb) = classical_run(b, x);
        let d = pa - pb;
        let first = *offset.get_or_insert(d);
        ya == yb && same_mod_tau(d, first)
    })
}

/// Σ 2(h(p) − 1) over the terms.
pub fn naive_formula(p: &PhasePolynomial) -> usize {
    p.terms().iter().map(|t| 2 * (t.parity.count_ones() - 1)).sum()
}
