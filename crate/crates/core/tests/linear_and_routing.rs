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

mod common;

use common::{classical_run, same_action};
use paritysynth::random::{random_cnot_rz_circuit, random_universal_circuit, rng};
use paritysynth::routing::identity_mapping;
use paritysynth::semantics::{check_connectivity, unitary_equivalent};
use paritysynth::synth::linear::{gauss_reduce, pmh_reduce, pmh_section_size};
use paritysynth::synth::{synth_linear, synth_linear_constrained};
use paritysynth::{
    resynthesize, route_swaps, segment, Circuit, CouplingGraph, FamilyKind, Gate, LinearFunction,
    Strategy,
};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;
use rand::Rng;

fn random_invertible(n: usize, seed: u64) -> LinearFunction {
    let mut r = rng(seed);
    let mut f = LinearFunction::identity(n);
    for _ in 0..4 * n * n {
        let a = r.gen_range(0..n);
        let b = (a + r.gen_range(1..n)) % n;
        f.cnot(a, b);
    }
    f
}

/// The map a CNOT circuit applies to basis states, read off column by column.
fn basis_map(c: &Circuit) -> LinearFunction {
    let n = c.num_qubits();
    let cols: Vec<u64> = (0..n).map(|j| classical_run(c, 1 << j).0).collect();
    let rows = (0..n)
        .map(|i| {
            let bits: String = (0..n).map(|j| if cols[j] >> i & 1 == 1 { '1' } else { '0' }).collect();
            bits
        })
        .collect::<Vec<_>>();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    LinearFunction::from_strs(&refs).unwrap()
}

#[test]
fn linear_synthesis_replays_to_target() {
    for seed in 0..20 {
        let f = random_invertible(8, seed);
        let c = synth_linear(&f).unwrap();
        assert_eq!(basis_map(&c), f);
        let gauss = gauss_reduce(&f).unwrap().len();
        assert!(c.cnot_count() <= gauss);
        assert!(pmh_reduce(&f, pmh_section_size(8)).unwrap().len() >= c.cnot_count());
    }
}

#[test]
fn constrained_linear_on_line_stays_on_edges() {
    let line = CouplingGraph::line(8).unwrap();
    let mut worst = 0;
    for seed in 0..20 {
        let f = random_invertible(8, 100 + seed);
        let c = synth_linear_constrained(&f, &line).unwrap();
        assert_eq!(basis_map(&c), f);
        assert!(check_connectivity(&c, &line).is_empty());
        worst = worst.max(c.cnot_count());
    }
    assert!(worst <= 4 * 8 * 8, "{worst}");
}

#[test]
fn routing_examples() {
    let line = CouplingGraph::line(3).unwrap();
    let c = Circuit::from_gates(3, [Gate::cnot(0, 2)]).unwrap();
    let r = route_swaps(&c, &line, &identity_mapping(3)).unwrap();
    assert_eq!((r.swaps_inserted, r.c_routed, r.alpha), (1, 4, 4.0));
}

/// Appends SWAPs so each logical qubit ends on its starting wire.
fn undo_mapping(c: &Circuit, final_mapping: &[usize]) -> Circuit {
    let mut out = c.expand_swaps();
    let mut at = final_mapping.to_vec();
    for l in 0..at.len() {
        if at[l] != l {
            let other = at.iter().position(|&p| p == l).unwrap();
            out.push(Gate::Swap(at[l], l)).unwrap();
            at.swap(l, other);
        }
    }
    out.expand_swaps()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routing_preserves_semantics(n in 2usize..8, rz in 0usize..15, cx in 1usize..30, family in 0usize..5, seed in any::<u64>()) {
        let c = random_cnot_rz_circuit(n, rz, cx, &mut rng(seed));
        let graph = FamilyKind::ALL[family].with_size(n).unwrap();
        let r = route_swaps(&c, &graph, &identity_mapping(n)).unwrap();
        prop_assert!(check_connectivity(&r.routed_circuit.expand_swaps(), &graph).is_empty());
        prop_assert!(r.alpha >= 1.0);
        prop_assert_eq!(r.c_routed, r.c_baseline + 3 * r.swaps_inserted);
        prop_assert!(same_action(&c, &undo_mapping(&r.routed_circuit, &r.final_mapping)));
    }

    #[test]
    fn cnot_row_and_wire_rules_agree(n in 2usize..7, seed in any::<u64>()) {
        let c = random_cnot_rz_circuit(n, 0, 12, &mut rng(seed));
        prop_assert_eq!(basis_map(&c), LinearFunction::from_circuit(&c));
    }

    #[test]
    fn resynthesis_is_statevector_equivalent(
        (n, h, rz, cx) in (2usize..=5).prop_flat_map(|n| (Just(n), 0usize..=6, 0usize..=20, 0usize..=20)),
        seed in any::<u64>(),
    ) {
        let c = random_universal_circuit(n, h, rz, cx, &mut rng(seed));
        let line = CouplingGraph::line(n).unwrap();
        let seg = segment(&c).unwrap();
        prop_assert_eq!(seg.segments.len(), seg.hadamard_layers.len() + 1);
        for s in [Strategy::Recursive, Strategy::Dfs] {
            let r = resynthesize(&c, Some(&line), s).unwrap();
            prop_assert!(unitary_equivalent(&c, &r.circuit, 1e-7).unwrap());
            if s.is_constrained() {
                prop_assert!(check_connectivity(&r.circuit, &line).is_empty());
            }
            prop_assert!(paritysynth::same_segmentation(&r.circuit, &c).unwrap());
        }
    }
}
