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

use std::f64::consts::FRAC_PI_4;

use common::{implements_exactly, naive_formula};
use paritysynth::oracle::{enumerate_polynomials, optimal_cnot_count};
use paritysynth::random::seeded_polynomial;
use paritysynth::semantics::{check_connectivity, extract};
use paritysynth::synth::{
    disconnect_qubit, disconnect_qubit_dfs, synth_constrained_dfs, synth_naive, synth_recursive,
    synth_steiner_naive,
};
use paritysynth::{
    synthesize, BitVec, CouplingGraph, FamilyKind, LinearFunction, ParityMatrix, PhasePolynomial,
    Strategy,
};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn poly(n: usize, terms: &[&str]) -> PhasePolynomial {
    PhasePolynomial::new(n, terms.iter().map(|s| (BitVec::parse(s).unwrap(), FRAC_PI_4))).unwrap()
}

fn full_term(n: usize) -> PhasePolynomial {
    PhasePolynomial::new(n, [(BitVec::ones(n), 0.7)]).unwrap()
}

#[test]
fn naive_matches_ladder_formula() {
    for seed in 0..40 {
        let n = 2 + (seed as usize % 7);
        let g = (1 + seed as usize % 20).min((1 << n) - 1);
        let p = seeded_polynomial(n, g, seed).unwrap();
        let r = synth_naive(&p);
        assert_eq!(r.cnots, naive_formula(&p));
        let per_term = r.per_term_cnots.unwrap();
        assert_eq!(per_term.iter().sum::<usize>(), r.cnots);
    }
}

#[test]
fn full_weight_term_uses_two_n_minus_two() {
    for n in 2..=10 {
        let p = full_term(n);
        for s in [Strategy::Naive, Strategy::Recursive] {
            let r = synthesize(&p, s, None).unwrap();
            assert!(r.cnots() <= 2 * (n - 1), "{s} n={n}: {}", r.cnots());
            assert!(implements_exactly(r.circuit(), &p));
        }
    }
}

#[test]
fn all_parities_on_three_qubits() {
    let p = poly(3, &["100", "010", "110", "001", "101", "011", "111"]);
    let r = synth_recursive(&p);
    assert!(r.cnots <= 24);
    assert!(implements_exactly(&r.circuit, &p));
    let opt = optimal_cnot_count(&p, None, 12).unwrap();
    assert!(opt.optimal_cnots.unwrap() <= r.cnots);
}

#[test]
fn steiner_ladder_cost_on_a_line() {
    // terminals {0, 2} with Steiner node 1: two edges plus one fill, mirrored
    let line = CouplingGraph::line(3).unwrap();
    let r = synth_steiner_naive(&poly(3, &["101"]), &line).unwrap();
    assert_eq!(r.synthesis.cnots, 6);
    let r = synth_steiner_naive(&poly(3, &["010"]), &line).unwrap();
    assert_eq!((r.synthesis.cnots, r.synthesis.circuit.count_kind("rz")), (0, 1));
}

#[test]
fn constrained_on_complete_matches_unconstrained_scale() {
    let k = CouplingGraph::complete(6).unwrap();
    for seed in 0..10 {
        let p = seeded_polynomial(6, 20, seed).unwrap();
        let free = synth_recursive(&p).cnots;
        let tied = synth_constrained_dfs(&p, &k).unwrap();
        assert_eq!(tied.violations, 0);
        assert!(tied.synthesis.cnots <= 4 * free.max(1));
    }
}

#[test]
fn disconnect_unconstrained_examples() {
    let m = ParityMatrix::from_columns(
        4,
        ["1000", "1100", "1110", "1111"].iter().map(|s| BitVec::parse(s).unwrap()),
    )
    .unwrap();
    let d = disconnect_qubit(&m, 0).unwrap();
    assert!(d.cnots.len() <= 3);
    assert!(d.matrix.row(0).is_zero());
}

#[test]
fn disconnect_dfs_on_a_line() {
    let line = CouplingGraph::line(4).unwrap();
    let tree = line.spanning_tree(0).unwrap();
    let m = ParityMatrix::from_columns(
        4,
        ["1100", "1010", "1001"].iter().map(|s| BitVec::parse(s).unwrap()),
    )
    .unwrap();
    let d = disconnect_qubit_dfs(&m, 0, &tree).unwrap();
    assert!(d.matrix.row(0).is_zero());
    assert!(d.cnots.len() <= 4 * d.splits && d.cnots.len() <= 12);
    assert!(d.cnots.iter().all(|&(a, b)| line.has_edge(a, b)));
}

#[test]
fn oracle_never_beaten_and_constraints_never_help() {
    let line = CouplingGraph::line(3).unwrap();
    for p in enumerate_polynomials(3, 3) {
        let free = optimal_cnot_count(&p, None, 12).unwrap();
        let tied = optimal_cnot_count(&p, Some(&line), 12).unwrap();
        let (Some(f), Some(t)) = (free.optimal_cnots, tied.optimal_cnots) else {
            continue;
        };
        assert!(f <= t);
        for s in Strategy::ALL {
            let graph = s.is_constrained().then_some(&line);
            let got = synthesize(&p, s, graph).unwrap().cnots();
            let bound = if s.is_constrained() { t } else { f };
            assert!(got >= bound, "{s} beat the optimum on {p:?}");
        }
        let w = tied.witness.unwrap();
        assert!(check_connectivity(&w, &line).is_empty());
        assert!(implements_exactly(&w, &p));
    }
}

fn arb_instance() -> impl proptest::strategy::Strategy<Value = (usize, usize, u64)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), 1usize..=((1 << n) - 1).min(24), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_strategy_is_exact_and_on_graph((n, g, seed) in arb_instance(), family in 0usize..5) {
        let p = seeded_polynomial(n, g, seed).unwrap();
        let graph = FamilyKind::ALL[family].with_size(n).unwrap();
        for s in Strategy::ALL {
            let r = synthesize(&p, s, Some(&graph)).unwrap();
            prop_assert!(implements_exactly(r.circuit(), &p), "{} on {}", s, FamilyKind::ALL[family].name());
            let (q, lin) = extract(r.circuit()).unwrap();
            prop_assert_eq!(q, p.clone());
            prop_assert!(lin.is_identity());
            if let Some(c) = r.constrained() {
                prop_assert_eq!(c.violations, 0);
                prop_assert!(check_connectivity(r.circuit(), &graph).is_empty());
                for d in &c.disconnects {
                    prop_assert!(d.cnots <= 4 * d.splits);
                }
            }
        }
    }

    #[test]
    fn synthesis_to_a_target_map((n, g, seed) in arb_instance()) {
        let p = seeded_polynomial(n, g, seed).unwrap();
        let mut f = LinearFunction::identity(n);
        for i in 0..n - 1 {
            f.cnot(i + 1, i);
        }
        let line = CouplingGraph::line(n).unwrap();
        for s in Strategy::ALL {
            let r = paritysynth::synthesize_to(&p, s, Some(&line), &f).unwrap();
            let (q, lin) = extract(r.circuit()).unwrap();
            prop_assert_eq!(q, p.clone());
            prop_assert_eq!(lin, f.clone());
        }
    }
}
