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

//! CNOT+H+Rz circuits: cut at Hadamard layers, resynthesize each
//! phase-polynomial segment, and reassemble.

use std::collections::BTreeSet;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::CouplingGraph;
use crate::linear::LinearFunction;
use crate::poly::PhasePolynomial;
use crate::semantics::extract;
use crate::synth::{synthesize_to, Strategy, SynthesisReport};

/// A circuit split into `h + 1` CNOT+Rz segments separated by `h` layers of
/// Hadamards on distinct qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Segmentation {
    pub num_qubits: usize,
    pub segments: Vec<(PhasePolynomial, LinearFunction)>,
    pub hadamard_layers: Vec<BTreeSet<usize>>,
    /// Folded term count of each segment.
    pub segment_term_counts: Vec<usize>,
}

impl Segmentation {
    pub fn total_terms(&self) -> usize {
        self.segment_term_counts.iter().sum()
    }

    pub fn num_layers(&self) -> usize {
        self.hadamard_layers.len()
    }

    /// Normal form for comparing segmentations. Two layers separated only by
    /// an empty identity segment merge into their symmetric difference
    /// (Hadamards on distinct qubits commute and square to the identity); a
    /// layer that vanishes joins its neighbouring segments into one.
    ///
    /// Equal normal forms imply equal circuits; the converse does not hold.
    pub fn canonical(&self) -> Result<Segmentation> {
        let n = self.num_qubits;
        let mut segs = self.segments.clone();
        let mut layers = self.hadamard_layers.clone();
        let trivial = |(p, f): &(PhasePolynomial, LinearFunction)| p.is_empty() && f.is_identity();
        while let Some(i) = (1..segs.len().saturating_sub(1)).find(|&i| trivial(&segs[i])) {
            segs.remove(i);
            let next = layers.remove(i);
            let merged: BTreeSet<usize> = layers[i - 1].symmetric_difference(&next).copied().collect();
            if merged.is_empty() {
                layers.remove(i - 1);
                let after = segs.remove(i);
                let before = &segs[i - 1];
                let mut c = synthesize_to(&before.0, Strategy::Naive, None, &before.1)?.circuit().clone();
                c.extend(synthesize_to(&after.0, Strategy::Naive, None, &after.1)?.circuit())?;
                segs[i - 1] = extract(&c)?;
            } else {
                layers[i - 1] = merged;
            }
        }
        let segment_term_counts = segs.iter().map(|(p, _)| p.len()).collect();
        Ok(Segmentation {
            num_qubits: n,
            segments: segs,
            hadamard_layers: layers,
            segment_term_counts,
        })
    }
}

/// Greedy segmentation: maximal CNOT+Rz runs, with consecutive Hadamards on
/// distinct qubits sharing a layer. SWAP gates are rejected.
pub fn segment(circuit: &Circuit) -> Result<Segmentation> {
    let n = circuit.num_qubits();
    let mut runs = vec![Circuit::new(n)];
    let mut layers: Vec<BTreeSet<usize>> = Vec::new();
    let mut in_layer = false;
    for &g in circuit.gates() {
        match g {
            Gate::H(q) => {
                let extend = in_layer && !layers.last().is_some_and(|l| l.contains(&q));
                if !extend {
                    if in_layer {
                        // repeated qubit: an empty segment separates the layers
                        runs.push(Circuit::new(n));
                    }
                    layers.push(BTreeSet::new());
                    in_layer = true;
                }
                layers.last_mut().expect("layer just ensured").insert(q);
            }
            Gate::Swap(..) => return Err(Error::UnsupportedGate("swap")),
            g => {
                if in_layer {
                    runs.push(Circuit::new(n));
                    in_layer = false;
                }
                runs.last_mut().expect("at least one run").push_unchecked(g);
            }
        }
    }
    if in_layer {
        runs.push(Circuit::new(n));
    }
    let segments = runs.iter().map(extract).collect::<Result<Vec<_>>>()?;
    let segment_term_counts = segments.iter().map(|(p, _)| p.len()).collect();
    Ok(Segmentation {
        num_qubits: n,
        segments,
        hadamard_layers: layers,
        segment_term_counts,
    })
}

/// Whether `a` and `b` have the same segmentation normal form. A `true`
/// answer proves equivalence; `false` is inconclusive.
pub fn same_segmentation(a: &Circuit, b: &Circuit) -> Result<bool> {
    Ok(segment(a)?.canonical()? == segment(b)?.canonical()?)
}

/// Segments `circuit` and synthesizes every segment's polynomial and linear
/// part with `strategy`, keeping the Hadamard layers in place. With a graph,
/// every CNOT of a constrained strategy lies on one of its edges.
pub fn resynthesize(
    circuit: &Circuit,
    graph: Option<&CouplingGraph>,
    strategy: Strategy,
) -> Result<SynthesisReport> {
    let n = circuit.num_qubits();
    if let Some(g) = graph {
        if g.num_vertices() != n {
            return Err(Error::Dimension {
                expected: n,
                got: g.num_vertices(),
            });
        }
    }
    let seg = segment(circuit)?;
    let mut out = Circuit::new(n);
    let mut cleanup = 0;
    for (i, (poly, lin)) in seg.segments.iter().enumerate() {
        let report = synthesize_to(poly, strategy, graph, lin)?;
        cleanup += report.synthesis().cleanup_cnots;
        out.extend(report.circuit())?;
        if let Some(layer) = seg.hadamard_layers.get(i) {
            for &q in layer {
                out.push_unchecked(Gate::H(q));
            }
        }
    }
    Ok(SynthesisReport::new(out, strategy, None, cleanup))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::unitary_equivalent;

    fn circ(n: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(n, gates).unwrap()
    }

    #[test]
    fn no_hadamard_single_segment() {
        let c = circ(2, vec![Gate::cnot(0, 1), Gate::rz(0.5, 1), Gate::cnot(0, 1)]);
        let s = segment(&c).unwrap();
        assert_eq!((s.segments.len(), s.num_layers()), (1, 0));
        assert_eq!(s.segment_term_counts, vec![1]);
    }

    #[test]
    fn parallel_hadamards_share_a_layer() {
        let c = circ(2, vec![Gate::H(0), Gate::H(1), Gate::cnot(0, 1)]);
        let s = segment(&c).unwrap();
        assert_eq!(s.segments.len(), 2);
        assert!(s.segments[0].0.is_empty() && s.segments[0].1.is_identity());
        assert_eq!(s.hadamard_layers, vec![BTreeSet::from([0, 1])]);
        let c = circ(1, vec![Gate::H(0), Gate::H(0)]);
        let s = segment(&c).unwrap();
        assert_eq!((s.segments.len(), s.num_layers()), (3, 2));
        let k = s.canonical().unwrap();
        assert_eq!((k.segments.len(), k.num_layers()), (1, 0));
    }

    #[test]
    fn canonical_merges_split_layers() {
        // H1 | H1 H0 and H1 H0 | H1 group differently but are the same gates
        let a = circ(2, vec![Gate::H(1), Gate::H(1), Gate::H(0), Gate::rz(0.2, 0)]);
        let b = circ(2, vec![Gate::H(1), Gate::H(0), Gate::H(1), Gate::rz(0.2, 0)]);
        assert_ne!(segment(&a).unwrap(), segment(&b).unwrap());
        assert!(same_segmentation(&a, &b).unwrap());
        let c = circ(2, vec![Gate::H(1), Gate::rz(0.2, 0)]);
        assert!(!same_segmentation(&a, &c).unwrap());
    }

    #[test]
    fn duplicate_parities_fold() {
        let c = circ(
            2,
            vec![
                Gate::rz(0.1, 0),
                Gate::rz(0.2, 0),
                Gate::cnot(1, 0),
                Gate::rz(0.3, 0),
                Gate::H(1),
                Gate::rz(0.4, 1),
            ],
        );
        let s = segment(&c).unwrap();
        assert_eq!(s.segment_term_counts, vec![2, 1]);
        assert_eq!(s.total_terms(), 3);
    }

    #[test]
    fn resynthesis_preserves_unitary() {
        let c = circ(
            3,
            vec![
                Gate::cnot(0, 2),
                Gate::rz(0.7, 2),
                Gate::H(0),
                Gate::cnot(1, 0),
                Gate::rz(-1.1, 0),
                Gate::cnot(2, 1),
                Gate::H(2),
                Gate::rz(0.3, 1),
            ],
        );
        let line = CouplingGraph::line(3).unwrap();
        for strategy in Strategy::ALL {
            let r = resynthesize(&c, Some(&line), strategy).unwrap();
            assert!(unitary_equivalent(&c, &r.circuit, 1e-7).unwrap(), "{strategy}");
        }
        assert!(resynthesize(&c, Some(&CouplingGraph::line(4).unwrap()), Strategy::Dfs).is_err());
    }
}
