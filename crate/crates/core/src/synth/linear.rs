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

//! Synthesis of linear reversible (CNOT-only) circuits.
//!
//! Elimination routines return row operations `(control, target)` meaning
//! `row[target] ^= row[control]`, i.e. CNOT(control, target) in the wire
//! rule. Applying the returned operations, in order, to a circuit that
//! implements `f` yields the identity, so the list is itself a circuit for
//! `f⁻¹` and its reverse is a circuit for `f`.

use std::collections::HashMap;

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;
use crate::linear::{gf2_rank, LinearFunction};

pub type RowOp = (usize, usize);

/// Section width used by the block elimination for `n` qubits.
pub fn pmh_section_size(n: usize) -> usize {
    let l = (n.max(1) as f64).log2() / 2.0;
    (l.round() as usize).max(1)
}

fn check(f: &LinearFunction) -> Result<Vec<BitVec>> {
    let rows = f.rows().to_vec();
    if gf2_rank(rows.clone()) != rows.len() {
        return Err(Error::Singular);
    }
    Ok(rows)
}

/// Plain Gauss-Jordan elimination.
pub fn gauss_reduce(f: &LinearFunction) -> Result<Vec<RowOp>> {
    let mut a = check(f)?;
    let n = a.len();
    let mut ops = Vec::new();
    for col in 0..n {
        if !a[col].get(col) {
            let r = (col + 1..n).find(|&r| a[r].get(col)).ok_or(Error::Singular)?;
            let src = a[r].clone();
            a[col] ^= &src;
            ops.push((r, col));
        }
        let pivot = a[col].clone();
        for r in 0..n {
            if r != col && a[r].get(col) {
                a[r] ^= &pivot;
                ops.push((col, r));
            }
        }
    }
    Ok(ops)
}

fn pmh_lower(a: &mut [BitVec], section: usize) -> Vec<RowOp> {
    let n = a.len();
    let mut ops = Vec::new();
    let mut start = 0;
    while start < n {
        let end = (start + section).min(n);
        let mut seen: HashMap<u64, usize> = HashMap::new();
        for row in start..n {
            let key = (start..end).fold(0u64, |k, c| (k << 1) | a[row].get(c) as u64);
            if key == 0 {
                continue;
            }
            match seen.get(&key) {
                Some(&p) => {
                    let src = a[p].clone();
                    a[row] ^= &src;
                    ops.push((p, row));
                }
                None => {
                    seen.insert(key, row);
                }
            }
        }
        for col in start..end {
            let mut diag = a[col].get(col);
            for row in col + 1..n {
                if a[row].get(col) {
                    if !diag {
                        let src = a[row].clone();
                        a[col] ^= &src;
                        ops.push((row, col));
                        diag = true;
                    }
                    let src = a[col].clone();
                    a[row] ^= &src;
                    ops.push((col, row));
                }
            }
        }
        start = end;
    }
    ops
}

fn transpose(a: &[BitVec]) -> Vec<BitVec> {
    let n = a.len();
    (0..n)
        .map(|j| BitVec::from_indices(n, (0..n).filter(|&i| a[i].get(j))))
        .collect()
}

/// Patel-Markov-Hayes block elimination with the given section width.
pub fn pmh_reduce(f: &LinearFunction, section: usize) -> Result<Vec<RowOp>> {
    let mut a = check(f)?;
    let mut ops = pmh_lower(&mut a, section.max(1));
    let mut t = transpose(&a);
    let upper = pmh_lower(&mut t, section.max(1));
    ops.extend(upper.into_iter().rev().map(|(s, d)| (d, s)));
    Ok(ops)
}

/// The shorter of block elimination and plain Gaussian elimination.
pub fn reduce_to_identity(f: &LinearFunction) -> Result<Vec<RowOp>> {
    let pmh = pmh_reduce(f, pmh_section_size(f.num_qubits()))?;
    let gauss = gauss_reduce(f)?;
    Ok(if gauss.len() < pmh.len() { gauss } else { pmh })
}

fn ops_to_circuit(n: usize, ops: impl IntoIterator<Item = RowOp>) -> Circuit {
    let mut c = Circuit::new(n);
    for (ctrl, tgt) in ops {
        c.push_unchecked(Gate::cnot(ctrl, tgt));
    }
    c
}

/// A CNOT circuit implementing `f`.
pub fn synth_linear(f: &LinearFunction) -> Result<Circuit> {
    let ops = reduce_to_identity(f)?;
    Ok(ops_to_circuit(f.num_qubits(), ops.into_iter().rev()))
}

/// Elimination restricted to the edges of `graph`: vertices are removed one
/// at a time, never disconnecting the rest, clearing the pivot column and
/// then the pivot row with Steiner trees over the remaining vertices.
///
/// The transpose is eliminated as well, and the shorter sequence is kept.
pub fn constrained_reduce(f: &LinearFunction, graph: &CouplingGraph) -> Result<Vec<RowOp>> {
    let direct = rowcol_reduce(check(f)?, graph)?;
    let transposed = rowcol_reduce(transpose(f.rows()), graph)?;
    if transposed.len() < direct.len() {
        // ops reducing f^T, reversed with operands exchanged, reduce f
        Ok(transposed.into_iter().rev().map(|(c, t)| (t, c)).collect())
    } else {
        Ok(direct)
    }
}

fn rowcol_reduce(mut a: Vec<BitVec>, graph: &CouplingGraph) -> Result<Vec<RowOp>> {
    let n = a.len();
    if graph.num_vertices() != n {
        return Err(Error::Dimension {
            expected: n,
            got: graph.num_vertices(),
        });
    }
    let mut ops = Vec::new();
    let mut alive = BitVec::ones(n);
    let order = elimination_order(graph);
    while alive.count_ones() > 1 {
        // every non-cut vertex is a leaf of some spanning tree; eliminate
        // the cheapest one
        let mut best: Option<(usize, Vec<BitVec>, Vec<RowOp>)> = None;
        for &v in order.iter().filter(|&&v| alive.get(v)) {
            let mut rest = alive.clone();
            rest.set(v, false);
            if !graph.is_connected_within(&rest) {
                continue;
            }
            let mut trial = a.clone();
            let step = eliminate_vertex(&mut trial, v, &alive, graph)?;
            if best.as_ref().is_none_or(|b| step.len() < b.2.len()) {
                best = Some((v, trial, step));
            }
        }
        let (v, next, step) = best.expect("a connected graph has a non-cut vertex");
        a = next;
        ops.extend(step);
        alive.set(v, false);
    }
    Ok(ops)
}

/// Clears column `v` and row `v` of `a` apart from the diagonal, using
/// Steiner trees inside `alive`.
fn eliminate_vertex(
    a: &mut [BitVec],
    v: usize,
    alive: &BitVec,
    graph: &CouplingGraph,
) -> Result<Vec<RowOp>> {
    let mut ops = Vec::new();
    let apply = |a: &mut [BitVec], ops: &mut Vec<RowOp>, ctrl: usize, tgt: usize| {
        let src = a[ctrl].clone();
        a[tgt] ^= &src;
        ops.push((ctrl, tgt));
    };
    // column v
    let terminals: Vec<usize> = alive.iter_ones().filter(|&r| r == v || a[r].get(v)).collect();
    let tree = graph.steiner_tree_within(&terminals, alive)?;
    let order = tree.postorder_from(v);
    for &(c, p) in &order {
        if !a[p].get(v) {
            apply(a, &mut ops, c, p);
        }
    }
    for &(c, p) in &order {
        apply(a, &mut ops, p, c);
    }
    // row v
    let mut want = a[v].clone();
    want.flip(v);
    let others: Vec<usize> = alive.iter_ones().filter(|&r| r != v).collect();
    let subset = solve_combination(a, &others, &want).ok_or(Error::Singular)?;
    if !subset.is_empty() {
        let mut terms = subset.clone();
        terms.push(v);
        let tree = graph.steiner_tree_within(&terms, alive)?;
        let mut children: HashMap<usize, Vec<usize>> = HashMap::new();
        for (c, p) in tree.postorder_from(v) {
            children.entry(p).or_default().push(c);
        }
        let is_terminal = |x: usize| subset.contains(&x);
        collect(v, &children, &is_terminal, &mut |c, t| apply(a, &mut ops, c, t));
    }
    Ok(ops)
}

/// Adds into `x` the rows of all terminals strictly below it. A Steiner child
/// is added before and after its own collection so only its terminals remain.
fn collect(
    x: usize,
    children: &HashMap<usize, Vec<usize>>,
    is_terminal: &dyn Fn(usize) -> bool,
    apply: &mut dyn FnMut(usize, usize),
) {
    let Some(kids) = children.get(&x) else { return };
    for &c in kids {
        if is_terminal(c) {
            collect(c, children, is_terminal, apply);
            apply(c, x);
        } else {
            apply(c, x);
            collect(c, children, is_terminal, apply);
            apply(c, x);
        }
    }
}

/// Indices (a subset of `rows`) whose rows XOR to `want`.
fn solve_combination(a: &[BitVec], rows: &[usize], want: &BitVec) -> Option<Vec<usize>> {
    let k = rows.len();
    let mut basis: Vec<(BitVec, BitVec)> = Vec::new();
    for (i, &r) in rows.iter().enumerate() {
        let mut v = a[r].clone();
        let mut tag = BitVec::unit(k, i);
        for (b, t) in &basis {
            if v.get(b.first_one().unwrap()) {
                v ^= b;
                tag ^= t;
            }
        }
        if let Some(p) = v.first_one() {
            for (b, t) in basis.iter_mut() {
                if b.get(p) {
                    *b ^= &v;
                    *t ^= &tag;
                }
            }
            basis.push((v, tag));
        }
    }
    let mut v = want.clone();
    let mut tag = BitVec::zeros(k);
    for (b, t) in &basis {
        if v.get(b.first_one().unwrap()) {
            v ^= b;
            tag ^= t;
        }
    }
    v.is_zero().then(|| tag.iter_ones().map(|i| rows[i]).collect())
}

/// Vertex removal order that keeps the remaining graph connected: reverse
/// BFS order of a spanning tree rooted at vertex 0.
pub fn elimination_order(graph: &CouplingGraph) -> Vec<usize> {
    let tree = graph.spanning_tree(0).expect("coupling graphs are connected");
    let mut order = tree.vertices();
    order.reverse();
    order
}

/// A CNOT circuit implementing `f` using only edges of `graph`.
pub fn synth_linear_constrained(f: &LinearFunction, graph: &CouplingGraph) -> Result<Circuit> {
    let ops = constrained_reduce(f, graph)?;
    Ok(ops_to_circuit(f.num_qubits(), ops.into_iter().rev()))
}
