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

//! Exhaustive tools for tiny instances: exact minimum CNOT counts and exact
//! Steiner trees.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;
use crate::poly::PhasePolynomial;
use crate::synth::{synthesize, Strategy};

pub const MAX_ORACLE_QUBITS: usize = 4;
pub const MAX_ORACLE_BUDGET: usize = 12;
/// Distinct search states kept before the search gives up.
pub const MAX_ORACLE_STATES: usize = 4_000_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptimalityCertificate {
    pub instance: String,
    /// `None` when the budget was exhausted first.
    pub optimal_cnots: Option<usize>,
    #[serde(skip)]
    pub witness: Option<Circuit>,
    pub nodes_explored: usize,
    pub budget_hit: bool,
}

/// Wire rows packed 4 bits each, plus the mask of realized terms.
type State = (u16, u16);
/// Predecessor state and the CNOT that led here.
type Parent = Option<(State, (usize, usize))>;

fn pack(rows: &[u16]) -> u16 {
    rows.iter().enumerate().fold(0, |acc, (i, &r)| acc | (r << (4 * i)))
}

fn unpack(n: usize, w: u16) -> Vec<u16> {
    (0..n).map(|i| (w >> (4 * i)) & 0xf).collect()
}

fn realized(rows: &[u16], parities: &[u16], mut mask: u16) -> u16 {
    for (j, p) in parities.iter().enumerate() {
        if rows.contains(p) {
            mask |= 1 << j;
        }
    }
    mask
}

/// Minimum number of CNOTs (on `graph` edges when given) of a CNOT+Rz
/// circuit implementing `poly` with identity linear part. Breadth-first
/// over (wire map, realized terms); an Rz is free whenever its parity sits
/// on a wire.
pub fn optimal_cnot_count(
    poly: &PhasePolynomial,
    graph: Option<&CouplingGraph>,
    max_cnots: usize,
) -> Result<OptimalityCertificate> {
    let n = poly.num_qubits();
    if n > MAX_ORACLE_QUBITS {
        return Err(Error::Capacity {
            n,
            max: MAX_ORACLE_QUBITS,
        });
    }
    if max_cnots > MAX_ORACLE_BUDGET {
        return Err(Error::Budget {
            budget: max_cnots,
            max: MAX_ORACLE_BUDGET,
        });
    }
    if let Some(g) = graph {
        if g.num_vertices() != n {
            return Err(Error::Dimension {
                expected: n,
                got: g.num_vertices(),
            });
        }
    }
    let instance = match graph {
        Some(g) => format!("n{n} g{} on n{}m{}", poly.len(), g.num_vertices(), g.num_edges()),
        None => format!("n{n} g{} unconstrained", poly.len()),
    };
    let parities: Vec<u16> = poly.terms().iter().map(|t| t.parity.to_u64() as u16).collect();
    let moves: Vec<(usize, usize)> = (0..n)
        .flat_map(|c| (0..n).map(move |t| (c, t)))
        .filter(|&(c, t)| c != t && graph.is_none_or(|g| g.has_edge(c, t)))
        .collect();
    let identity: Vec<u16> = (0..n).map(|i| 1 << i).collect();
    let start_w = pack(&identity);
    let full: u16 = if parities.is_empty() { 0 } else { u16::MAX >> (16 - parities.len()) };
    let start = (start_w, realized(&identity, &parities, 0));
    let goal = (start_w, full);

    let mut parent: HashMap<State, Parent> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut explored = 0;
    let mut found = start == goal;
    while !found {
        let Some((state, depth)) = queue.pop_front() else { break };
        explored += 1;
        if depth == max_cnots || parent.len() > MAX_ORACLE_STATES {
            break;
        }
        let rows = unpack(n, state.0);
        for &(c, t) in &moves {
            let mut next = rows.clone();
            next[t] ^= next[c];
            let s = (pack(&next), realized(&next, &parities, state.1));
            if parent.contains_key(&s) {
                continue;
            }
            parent.insert(s, Some((state, (c, t))));
            if s == goal {
                found = true;
                break;
            }
            queue.push_back((s, depth + 1));
        }
    }
    if !found {
        return Ok(OptimalityCertificate {
            instance,
            optimal_cnots: None,
            witness: None,
            nodes_explored: explored,
            budget_hit: true,
        });
    }
    let mut cnots = Vec::new();
    let mut cur = goal;
    while let Some(Some((prev, gate))) = parent.get(&cur) {
        cnots.push(*gate);
        cur = *prev;
    }
    cnots.reverse();
    let witness = replay(poly, &cnots);
    Ok(OptimalityCertificate {
        instance,
        optimal_cnots: Some(cnots.len()),
        witness: Some(witness),
        nodes_explored: explored,
        budget_hit: false,
    })
}

/// Emits the CNOT sequence with each Rz placed as soon as its parity appears.
fn replay(poly: &PhasePolynomial, cnots: &[(usize, usize)]) -> Circuit {
    let n = poly.num_qubits();
    let mut rows: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
    let mut done = vec![false; poly.len()];
    let mut c = Circuit::new(n);
    let mut emit = |rows: &[BitVec], c: &mut Circuit| {
        for (j, term) in poly.terms().iter().enumerate() {
            if let Some(w) = rows.iter().position(|r| *r == term.parity).filter(|_| !done[j]) {
                done[j] = true;
                c.push_unchecked(Gate::Rz {
                    angle: term.angle,
                    qubit: w,
                });
            }
        }
    };
    emit(&rows, &mut c);
    for &(ctl, tgt) in cnots {
        let src = rows[ctl].clone();
        rows[tgt] ^= &src;
        c.push_unchecked(Gate::cnot(ctl, tgt));
        emit(&rows, &mut c);
    }
    c
}

/// Distribution of `strategy count / optimal count` over a sample.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RatioSummary {
    pub instances: usize,
    /// Instances skipped because the oracle ran out of budget.
    pub skipped: usize,
    pub ratios: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
}

/// Compares `strategy` with the oracle on each polynomial. A zero optimum
/// matched by a zero count scores 1.
pub fn ratio_vs_optimal(
    strategy: Strategy,
    instances: &[PhasePolynomial],
    graph: Option<&CouplingGraph>,
    max_cnots: usize,
) -> Result<RatioSummary> {
    let mut summary = RatioSummary {
        instances: instances.len(),
        ..Default::default()
    };
    for p in instances {
        let cert = optimal_cnot_count(p, graph, max_cnots)?;
        let Some(opt) = cert.optimal_cnots else {
            summary.skipped += 1;
            continue;
        };
        let got = synthesize(p, strategy, graph)?.cnots();
        let r = match (got, opt) {
            (0, 0) => 1.0,
            (_, 0) => f64::INFINITY,
            _ => got as f64 / opt as f64,
        };
        summary.ratios.push(r);
    }
    let mut sorted = summary.ratios.clone();
    sorted.sort_by(f64::total_cmp);
    if let (Some(&lo), Some(&hi)) = (sorted.first(), sorted.last()) {
        summary.min = lo;
        summary.max = hi;
        summary.mean = sorted.iter().sum::<f64>() / sorted.len() as f64;
        summary.median = sorted[sorted.len() / 2];
    }
    Ok(summary)
}

/// Every polynomial on `n` qubits with between 1 and `max_terms` distinct
/// parities, all at angle π/4.
pub fn enumerate_polynomials(n: usize, max_terms: usize) -> Vec<PhasePolynomial> {
    let parities: Vec<BitVec> = (1..1u64 << n).map(|x| BitVec::from_u64(n, x)).collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        start: usize,
        n: usize,
        max: usize,
        parities: &[BitVec],
        pick: &mut Vec<usize>,
        out: &mut Vec<PhasePolynomial>,
    ) {
        if !pick.is_empty() {
            let terms = pick.iter().map(|&i| (parities[i].clone(), FRAC_PI_4));
            out.push(PhasePolynomial::new(n, terms).expect("distinct parities"));
        }
        if pick.len() == max {
            return;
        }
        for i in start..parities.len() {
            pick.push(i);
            rec(i + 1, n, max, parities, pick, out);
            pick.pop();
        }
    }
    rec(0, n, max_terms, &parities, &mut pick, &mut out);
    out
}

/// Fewest edges of any subtree of `graph` spanning `terminals`, by
/// enumerating vertex subsets. Limited to 20 vertices.
pub fn exact_steiner_edges(graph: &CouplingGraph, terminals: &[usize]) -> Result<usize> {
    let n = graph.num_vertices();
    if n > 20 {
        return Err(Error::Capacity { n, max: 20 });
    }
    if let Some(&t) = terminals.iter().find(|&&t| t >= n) {
        return Err(Error::QubitOutOfRange { qubit: t, n });
    }
    let must = terminals.iter().fold(0u32, |m, &t| m | 1 << t);
    if must.count_ones() <= 1 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for set in 0u32..1 << n {
        if set & must != must || set.count_ones() as usize > best {
            continue;
        }
        let alive = BitVec::from_indices(n, (0..n).filter(|&i| set >> i & 1 == 1));
        if graph.is_connected_within(&alive) {
            best = best.min(set.count_ones() as usize);
        }
    }
    Ok(best - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{check_connectivity, implements};

    fn poly(n: usize, terms: &[&str]) -> PhasePolynomial {
        PhasePolynomial::new(n, terms.iter().map(|s| (BitVec::parse(s).unwrap(), FRAC_PI_4)))
            .unwrap()
    }

    #[test]
    fn two_qubit_term() {
        let c = optimal_cnot_count(&poly(2, &["11"]), None, 12).unwrap();
        assert_eq!(c.optimal_cnots, Some(2));
        assert!(implements(c.witness.as_ref().unwrap(), &poly(2, &["11"])).unwrap());
    }

    #[test]
    fn single_qubit_terms_free() {
        let c = optimal_cnot_count(&poly(3, &["100", "001"]), None, 12).unwrap();
        assert_eq!(c.optimal_cnots, Some(0));
        assert_eq!(c.witness.unwrap().count_kind("rz"), 2);
    }

    #[test]
    fn constrained_not_cheaper() {
        let p = poly(3, &["101"]);
        let line = CouplingGraph::line(3).unwrap();
        let free = optimal_cnot_count(&p, None, 12).unwrap().optimal_cnots.unwrap();
        let cert = optimal_cnot_count(&p, Some(&line), 12).unwrap();
        let tied = cert.optimal_cnots.unwrap();
        assert_eq!((free, tied), (2, 6));
        assert!(check_connectivity(cert.witness.as_ref().unwrap(), &line).is_empty());
        let p = poly(3, &["111"]);
        let free = optimal_cnot_count(&p, None, 12).unwrap().optimal_cnots.unwrap();
        let tied = optimal_cnot_count(&p, Some(&line), 12).unwrap().optimal_cnots.unwrap();
        assert!(tied >= free);
    }

    #[test]
    fn limits() {
        assert!(optimal_cnot_count(&PhasePolynomial::empty(5), None, 4).is_err());
        assert!(optimal_cnot_count(&PhasePolynomial::empty(2), None, 13).is_err());
        let c = optimal_cnot_count(&poly(3, &["111"]), None, 1).unwrap();
        assert!(c.budget_hit && c.optimal_cnots.is_none());
    }

    #[test]
    fn naive_is_optimal_on_single_two_qubit_terms() {
        let all = enumerate_polynomials(2, 1);
        assert_eq!(all.len(), 3);
        let s = ratio_vs_optimal(Strategy::Naive, &all, None, 12).unwrap();
        assert_eq!((s.min, s.max), (1.0, 1.0));
    }

    #[test]
    fn steiner_exact() {
        let grid = CouplingGraph::grid(3, 3).unwrap();
        assert_eq!(exact_steiner_edges(&grid, &[0, 8]).unwrap(), 4);
        assert_eq!(exact_steiner_edges(&grid, &[0, 2, 6]).unwrap(), 4);
        assert_eq!(exact_steiner_edges(&grid, &[4]).unwrap(), 0);
    }
}
