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

//! Synthesis restricted to the edges of a coupling graph.

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::{CouplingGraph, SpanningTree, TreeMode};
use crate::linear::LinearFunction;
use crate::poly::{ParityMatrix, PhasePolynomial};
use crate::synth::linear::{elimination_order, synth_linear_constrained};
use crate::synth::work::Work;
use crate::synth::{check_sizes, ConstrainedReport, DisconnectStats, Strategy, SynthesisReport};

/// One Steiner-tree ladder per term: fill the Steiner nodes, fold every
/// tree edge toward the lowest-index terminal, rotate there, then undo.
pub fn synth_steiner_naive(
    poly: &PhasePolynomial,
    graph: &CouplingGraph,
) -> Result<ConstrainedReport> {
    steiner_to(poly, graph, &LinearFunction::identity(poly.num_qubits()))
}

pub(crate) fn steiner_to(
    poly: &PhasePolynomial,
    graph: &CouplingGraph,
    target: &LinearFunction,
) -> Result<ConstrainedReport> {
    check_sizes(poly, graph)?;
    let mut c = Circuit::new(poly.num_qubits());
    let mut per_term = Vec::with_capacity(poly.len());
    let mut steps = 0;
    for t in poly.terms() {
        let terminals: Vec<usize> = t.parity.iter_ones().collect();
        let tree = graph.steiner_tree(&terminals)?;
        let root = terminals[0];
        let order = tree.postorder_from(root);
        let mut col = t.parity.clone();
        let mut ladder = Vec::new();
        for &(child, parent) in &order {
            if !col.get(parent) {
                ladder.push(Gate::cnot(parent, child));
                col.set(parent, true);
            }
        }
        for &(child, parent) in &order {
            ladder.push(Gate::cnot(child, parent));
        }
        for &g in &ladder {
            c.push_unchecked(g);
        }
        c.push_unchecked(Gate::Rz {
            angle: t.angle,
            qubit: root,
        });
        for &g in ladder.iter().rev() {
            c.push_unchecked(g);
        }
        per_term.push(2 * ladder.len());
        steps += ladder.len();
    }
    let mut cleanup = 0;
    if !target.is_identity() {
        let tail = synth_linear_constrained(target, graph)?;
        cleanup = tail.cnot_count();
        c.extend(&tail)?;
    }
    let synthesis = SynthesisReport::new(c, Strategy::Steiner, Some(per_term), cleanup);
    let mut report = ConstrainedReport::new(synthesis, graph, Vec::new(), if steps > 0 { 2 } else { 0 });
    report.splits = steps;
    Ok(report)
}

/// Eliminates qubits leaves-first; each qubit is disconnected over a BFS
/// spanning tree of the qubits still in play, rooted at it.
pub fn synth_constrained_dfs(
    poly: &PhasePolynomial,
    graph: &CouplingGraph,
) -> Result<ConstrainedReport> {
    dfs_to(poly, graph, &LinearFunction::identity(poly.num_qubits()))
}

pub(crate) fn dfs_to(
    poly: &PhasePolynomial,
    graph: &CouplingGraph,
    target: &LinearFunction,
) -> Result<ConstrainedReport> {
    check_sizes(poly, graph)?;
    let n = poly.num_qubits();
    let mut w = Work::new(poly);
    w.realize_all();
    let mut alive = BitVec::ones(n);
    let mut disconnects = Vec::new();
    let mut per_split_max = 0;
    let order = elimination_order(graph);
    while w.has_live() && !alive.is_zero() {
        // any vertex whose removal keeps the rest connected is a leaf of
        // some spanning tree; take the one whose disconnect is cheapest
        let mut best: Option<(usize, Work, DisconnectStats, usize)> = None;
        for &q in order.iter().filter(|&&q| alive.get(q)) {
            let mut rest = alive.clone();
            rest.set(q, false);
            if !graph.is_connected_within(&rest) {
                continue;
            }
            let tree = graph.spanning_tree_within(q, &alive, TreeMode::Bfs)?;
            let (trial, stats, worst) = best_gather(&w, &tree);
            if best.as_ref().is_none_or(|b| stats.cnots < b.2.cnots) {
                best = Some((q, trial, stats, worst));
            }
        }
        let (q, next, stats, worst) = best.expect("a connected graph has a non-cut vertex");
        w = next;
        per_split_max = per_split_max.max(worst);
        disconnects.push(stats);
        alive.set(q, false);
    }
    let cleanup = w.finish(target, Some(graph));
    let synthesis = SynthesisReport::new(w.into_circuit(), Strategy::Dfs, None, cleanup);
    Ok(ConstrainedReport::new(synthesis, graph, disconnects, per_split_max))
}

/// Runs the gather with both split orders and keeps the cheaper result.
fn best_gather(w: &Work, tree: &SpanningTree) -> (Work, DisconnectStats, usize) {
    let mut best: Option<(Work, DisconnectStats, usize)> = None;
    for ones_first in [true, false] {
        let mut trial = w.clone();
        let (stats, worst) = tree_gather(&mut trial, tree, ones_first);
        if best.as_ref().is_none_or(|b| stats.cnots < b.1.cnots) {
            best = Some((trial, stats, worst));
        }
    }
    best.expect("two candidates")
}

/// Post-order over the tree (heaviest subtrees first), skipping subtrees
/// that no term containing the root reaches.
fn gather_order(w: &Work, tree: &SpanningTree, s: &BitVec) -> Vec<usize> {
    let verts = tree.vertices();
    let n = w.n;
    let mut mask: Vec<Option<BitVec>> = vec![None; n];
    for &v in verts.iter().rev() {
        let mut m = w.rows[v].and(s);
        for &c in tree.children(v) {
            m |= mask[c].as_ref().expect("children precede parents");
        }
        mask[v] = Some(m);
    }
    let weight = |v: usize| mask[v].as_ref().map_or(0, |m| m.count_ones());
    let mut order = Vec::new();
    let mut stack = vec![(tree.root(), false)];
    while let Some((v, expanded)) = stack.pop() {
        if expanded {
            if v != tree.root() {
                order.push(v);
            }
            continue;
        }
        stack.push((v, true));
        let mut kids: Vec<usize> = tree.children(v).iter().copied().filter(|&c| weight(c) > 0).collect();
        kids.sort_by_key(|&c| (std::cmp::Reverse(weight(c)), c));
        // pushed in reverse so the heaviest child is visited first
        for &c in kids.iter().rev() {
            stack.push((c, false));
        }
    }
    order
}

/// Realizes every live term containing the tree root, using only tree edges
/// and never touching the root's row. Nodes are cleared in post-order; a
/// subset of terms that is uniform on the node and its parent costs one CNOT
/// (fold) or two (fill then fold, which together act as CNOT·SWAP on the
/// edge), and non-uniform subsets are split first.
fn tree_gather(w: &mut Work, tree: &SpanningTree, ones_first: bool) -> (DisconnectStats, usize) {
    let q = tree.root();
    let before = w.forward.len();
    let s = w.rows[q].and(&w.live);
    let order = gather_order(w, tree, &s);
    let mut splits = 0;
    let mut worst = 0;
    let mut stack = vec![(s, 0usize)];
    while let Some((mut t, k)) = stack.pop() {
        t &= &w.live;
        if t.is_zero() {
            continue;
        }
        let Some(&v) = order.get(k) else {
            debug_assert!(false, "terms survived the full traversal");
            continue;
        };
        let u = tree.parent(v).expect("non-root node");
        let on_v = t.and(&w.rows[v]);
        if on_v.is_zero() {
            stack.push((t, k + 1));
            continue;
        }
        if on_v != t {
            push_split(&mut stack, t.and_not(&on_v), on_v, k, ones_first);
            continue;
        }
        let on_u = t.and(&w.rows[u]);
        if on_u == t {
            w.cnot(v, u);
            worst = worst.max(1);
        } else if on_u.is_zero() {
            w.cnot(u, v);
            w.cnot(v, u);
            worst = 2;
        } else {
            push_split(&mut stack, t.and_not(&on_u), on_u, k, ones_first);
            continue;
        }
        splits += 1;
        stack.push((t, k + 1));
    }
    let stats = DisconnectStats {
        qubit: q,
        cnots: w.forward.len() - before,
        splits,
    };
    (stats, worst)
}

fn push_split(stack: &mut Vec<(BitVec, usize)>, zeros: BitVec, ones: BitVec, k: usize, ones_first: bool) {
    if ones_first {
        stack.push((zeros, k));
        stack.push((ones, k));
    } else {
        stack.push((ones, k));
        stack.push((zeros, k));
    }
}

/// Result of a tree-restricted disconnect.
#[derive(Debug, Clone)]
pub struct DfsDisconnect {
    pub cnots: Vec<(usize, usize)>,
    pub matrix: ParityMatrix,
    pub splits: usize,
}

/// Disconnects the root of `tree` from every term of `m` using only tree
/// edges. Terms that become single-qubit are removed from the returned matrix.
pub fn disconnect_qubit_dfs(m: &ParityMatrix, q: usize, tree: &SpanningTree) -> Result<DfsDisconnect> {
    if tree.root() != q {
        return Err(Error::WrongRoot {
            root: tree.root(),
            expected: q,
        });
    }
    let n = m.num_rows();
    if q >= n {
        return Err(Error::QubitOutOfRange { qubit: q, n });
    }
    let in_tree = BitVec::from_indices(n, tree.vertices());
    let mut w = Work::from_matrix(m);
    let s = w.rows[q].clone();
    for i in 0..n {
        if !in_tree.get(i) && w.rows[i].and_count(&s) > 0 {
            return Err(Error::InvalidGraph(format!(
                "qubit {i} shares a term with {q} but is not in the tree"
            )));
        }
    }
    let others = w.live.and_not(&s);
    w.live = s;
    w.realize_all();
    let (mut w, stats, _) = best_gather(&w, tree);
    w.live |= &others;
    Ok(DfsDisconnect {
        cnots: w.forward.clone(),
        matrix: w.live_matrix(),
        splits: stats.splits,
    })
}
