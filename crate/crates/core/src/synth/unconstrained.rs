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

//! Synthesis with all-to-all connectivity.

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::linear::LinearFunction;
use crate::poly::{ParityMatrix, PhasePolynomial};
use crate::synth::linear::synth_linear;
use crate::synth::work::Work;
use crate::synth::{Strategy, SynthesisReport};

/// One CNOT ladder per term: fold the term onto its lowest participating
/// qubit along a chain in index order, rotate, unfold.
pub fn synth_naive(poly: &PhasePolynomial) -> SynthesisReport {
    naive_to(poly, &LinearFunction::identity(poly.num_qubits())).expect("identity target")
}

pub(crate) fn naive_to(poly: &PhasePolynomial, target: &LinearFunction) -> Result<SynthesisReport> {
    let mut c = Circuit::new(poly.num_qubits());
    let mut per_term = Vec::with_capacity(poly.len());
    for t in poly.terms() {
        let q: Vec<usize> = t.parity.iter_ones().collect();
        let ladder: Vec<Gate> = q.windows(2).rev().map(|w| Gate::cnot(w[1], w[0])).collect();
        for &g in &ladder {
            c.push_unchecked(g);
        }
        c.push_unchecked(Gate::Rz {
            angle: t.angle,
            qubit: q[0],
        });
        for &g in ladder.iter().rev() {
            c.push_unchecked(g);
        }
        per_term.push(2 * ladder.len());
    }
    let mut cleanup = 0;
    if !target.is_identity() {
        let tail = synth_linear(target)?;
        cleanup = tail.cnot_count();
        c.extend(&tail)?;
    }
    Ok(SynthesisReport::new(c, Strategy::Naive, Some(per_term), cleanup))
}

/// Recursive splitting: qubits are disconnected one at a time, most
/// frequently participating first, and the residual linear function is
/// cleaned up at the end.
pub fn synth_recursive(poly: &PhasePolynomial) -> SynthesisReport {
    recursive_to(poly, &LinearFunction::identity(poly.num_qubits())).expect("identity target")
}

pub(crate) fn recursive_to(
    poly: &PhasePolynomial,
    target: &LinearFunction,
) -> Result<SynthesisReport> {
    let n = poly.num_qubits();
    let mut w = Work::new(poly);
    w.realize_all();
    let mut done = BitVec::zeros(n);
    while w.has_live() {
        let q = (0..n)
            .filter(|&q| !done.get(q))
            .max_by_key(|&q| (w.rows[q].and_count(&w.live), std::cmp::Reverse(q)))
            .expect("live terms touch a remaining qubit");
        gather(&mut w, q, &done);
        done.set(q, true);
    }
    let cleanup = w.finish(target, None);
    let c = w.into_circuit();
    Ok(SynthesisReport::new(c, Strategy::Recursive, None, cleanup))
}

/// Collects every live term containing `q` onto wire `q` and realizes it.
/// Row `q` itself is never modified: each CNOT(j, q) flips bit `j` on exactly
/// the terms still containing `q`, so pending subsets stay consistent.
/// Returns the number of CNOTs emitted.
fn gather(w: &mut Work, q: usize, done: &BitVec) -> usize {
    let n = w.n;
    let before = w.forward.len();
    let s = w.rows[q].and(&w.live);
    let mut free = BitVec::ones(n).and_not(done);
    free.set(q, false);
    let mut stack = vec![(s, free.clone())];
    while let Some((mut t, rest)) = stack.pop() {
        t &= &w.live;
        'fold: while !t.is_zero() {
            for j in free.iter_ones() {
                if t.is_subset_of(&w.rows[j]) {
                    w.cnot(j, q);
                    t &= &w.live;
                    continue 'fold;
                }
            }
            break;
        }
        if t.is_zero() {
            continue;
        }
        let Some(j) = rest
            .iter_ones()
            .max_by_key(|&j| (w.rows[j].and_count(&t), std::cmp::Reverse(j)))
        else {
            debug_assert!(false, "terms left without a splitting qubit");
            continue;
        };
        let mut rest = rest;
        rest.set(j, false);
        let t1 = t.and(&w.rows[j]);
        let t0 = t.and_not(&w.rows[j]);
        stack.push((t0, rest.clone()));
        stack.push((t1, rest));
    }
    w.forward.len() - before
}

/// Result of disconnecting one qubit from a parity matrix.
#[derive(Debug, Clone)]
pub struct Disconnect {
    /// CNOTs as (control, target), applied with the row rule.
    pub cnots: Vec<(usize, usize)>,
    /// Remaining columns; terms that became single-qubit along the way are
    /// removed, so row `q` is all zero.
    pub matrix: ParityMatrix,
}

/// Disconnects qubit `q` from every term of `m` by recursively splitting the
/// terms that contain it.
pub fn disconnect_qubit(m: &ParityMatrix, q: usize) -> Result<Disconnect> {
    let n = m.num_rows();
    if q >= n {
        return Err(Error::QubitOutOfRange { qubit: q, n });
    }
    let mut w = Work::from_matrix(m);
    // only terms containing q are realized here
    let s = w.rows[q].clone();
    let others = w.live.and_not(&s);
    w.live = s;
    w.realize_all();
    gather(&mut w, q, &BitVec::zeros(n));
    w.live |= &others;
    Ok(Disconnect {
        cnots: w.forward.clone(),
        matrix: w.live_matrix(),
    })
}
