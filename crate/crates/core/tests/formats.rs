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

use std::fs;
use std::path::{Path, PathBuf};

use paritysynth::io::{
    emit_graph, emit_phase_poly, emit_qasm, parse_graph, parse_phase_poly, parse_qasm, ParseError,
};
use paritysynth::random::{random_universal_circuit, rng, seeded_polynomial};
use paritysynth::{synthesize, CouplingGraph, FamilyKind, Strategy};
use proptest::prelude::*;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn files(dir: &str, ext: &str) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(fixtures().join(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    v.sort();
    v
}

#[test]
fn valid_fixtures_roundtrip() {
    for path in files("valid", "qasm") {
        let c = parse_qasm(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parse_qasm(&emit_qasm(&c)).unwrap(), c, "{}", path.display());
    }
    for path in files("valid", "poly") {
        let p = parse_phase_poly(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parse_phase_poly(&emit_phase_poly(&p)).unwrap(), p, "{}", path.display());
    }
    for path in files("valid", "graph") {
        let g = parse_graph(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g, "{}", path.display());
    }
}

fn parse_any(path: &Path) -> Result<(), ParseError> {
    let text = fs::read_to_string(path).unwrap();
    match path.extension().and_then(|e| e.to_str()) {
        Some("qasm") => parse_qasm(&text).map(drop),
        Some("poly") => parse_phase_poly(&text).map(drop),
        Some("graph") => parse_graph(&text).map(drop),
        other => panic!("unexpected fixture kind {other:?}"),
    }
}

#[test]
fn malformed_fixtures_report_positions() {
    let expected = fs::read_to_string(fixtures().join("malformed/expected.txt")).unwrap();
    let mut seen = 0;
    for line in expected.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let mut parts = line.splitn(4, ' ');
        let file = parts.next().unwrap();
        let row: usize = parts.next().unwrap().parse().unwrap();
        let col: usize = parts.next().unwrap().parse().unwrap();
        let fragment = parts.next().unwrap();
        let path = fixtures().join("malformed").join(file);
        let text = fs::read_to_string(&path).unwrap();
        let e = parse_any(&path).expect_err(file);
        assert_eq!((e.span.line, e.span.column), (row, col), "{file}: {e}");
        assert!(e.span.offset <= text.len());
        assert!(e.message.contains(fragment), "{file}: {e}");
        seen += 1;
    }
    let on_disk = ["qasm", "poly", "graph"].iter().map(|e| files("malformed", e).len()).sum::<usize>();
    assert_eq!(seen, on_disk, "every malformed fixture needs an expectation");
}

#[test]
fn synthesized_circuits_roundtrip() {
    for seed in 0..20 {
        let p = seeded_polynomial(5, 12, seed).unwrap();
        let line = CouplingGraph::line(5).unwrap();
        for s in Strategy::ALL {
            let c = synthesize(&p, s, Some(&line)).unwrap().circuit().clone();
            assert_eq!(parse_qasm(&emit_qasm(&c)).unwrap(), c);
        }
    }
}

#[test]
fn family_graphs_roundtrip() {
    for kind in FamilyKind::ALL {
        for n in [2, 5, 9, 16] {
            let g = kind.with_size(n).unwrap();
            assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_circuits_roundtrip(n in 1usize..7, h in 0usize..6, rz in 0usize..20, cx in 0usize..20, seed in any::<u64>()) {
        let c = random_universal_circuit(n, h, rz, cx, &mut rng(seed));
        prop_assert_eq!(parse_qasm(&emit_qasm(&c)).unwrap(), c);
    }

    #[test]
    fn random_polynomials_roundtrip(n in 1usize..9, g in 1usize..40, seed in any::<u64>()) {
        let g = g.min((1 << n) - 1);
        let p = seeded_polynomial(n, g, seed).unwrap();
        prop_assert_eq!(parse_phase_poly(&emit_phase_poly(&p)).unwrap(), p);
    }

    #[test]
    fn errors_point_inside_input(text in "[ -~\n]{0,80}") {
        for e in [
            parse_qasm(&text).err(),
            parse_phase_poly(&text).err(),
            parse_graph(&text).err(),
        ].into_iter().flatten() {
            prop_assert!(e.span.offset <= text.len());
            prop_assert!(e.span.line >= 1 && e.span.column >= 1);
        }
    }
}
