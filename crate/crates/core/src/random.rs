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

//! Seeded random instances. All randomness comes from ChaCha8 seeded with a
//! 64-bit value, so a seed fully determines every instance.

use std::collections::HashSet;
use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::Angle;
use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::poly::PhasePolynomial;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes sweep coordinates into one instance seed (SplitMix64 finalizer).
pub fn instance_seed(base: u64, parts: &[u64]) -> u64 {
    let mut z = base;
    for &p in parts {
        z = z.wrapping_add(p.wrapping_add(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
    }
    z
}

fn random_angle(rng: &mut impl Rng) -> Angle {
    loop {
        let a = Angle::new(rng.gen_range(0.0..TAU));
        if !a.is_zero() {
            return a;
        }
    }
}

fn random_nonzero_parity(n: usize, rng: &mut impl Rng) -> BitVec {
    loop {
        let p = BitVec::from_indices(n, (0..n).filter(|_| rng.gen::<bool>()));
        if !p.is_zero() {
            return p;
        }
    }
}

/// `g` distinct nonzero parities drawn uniformly, with angles uniform in (0, 2π).
pub fn random_polynomial(n: usize, g: usize, rng: &mut impl Rng) -> Result<PhasePolynomial> {
    let max = if n >= 64 { usize::MAX } else { (1usize << n) - 1 };
    if g > max {
        return Err(Error::TooManyTerms { g, n });
    }
    let parities: Vec<BitVec> = if n <= 20 && g * 2 > max {
        let mut all: Vec<u64> = (1..=max as u64).collect();
        all.shuffle(rng);
        all.truncate(g);
        all.into_iter().map(|x| BitVec::from_u64(n, x)).collect()
    } else {
        let mut seen = HashSet::with_capacity(g);
        let mut out = Vec::with_capacity(g);
        while out.len() < g {
            let p = random_nonzero_parity(n, rng);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        out
    };
    let terms: Vec<(BitVec, Angle)> = parities.into_iter().map(|p| (p, random_angle(rng))).collect();
    PhasePolynomial::new(n, terms)
}

pub fn seeded_polynomial(n: usize, g: usize, seed: u64) -> Result<PhasePolynomial> {
    random_polynomial(n, g, &mut self::rng(seed))
}

/// Random CNOT+H+Rz circuit with exactly `h_gates` Hadamards, `rz_gates`
/// rotations and `cnot_gates` CNOTs in random order.
pub fn random_universal_circuit(
    n: usize,
    h_gates: usize,
    rz_gates: usize,
    cnot_gates: usize,
    rng: &mut impl Rng,
) -> Circuit {
    let mut kinds: Vec<u8> = std::iter::repeat_n(0, h_gates)
        .chain(std::iter::repeat_n(1, rz_gates))
        .chain(std::iter::repeat_n(2, if n > 1 { cnot_gates } else { 0 }))
        .collect();
    kinds.shuffle(rng);
    let mut c = Circuit::new(n);
    for k in kinds {
        let g = match k {
            0 => Gate::H(rng.gen_range(0..n)),
            1 => Gate::Rz {
                angle: random_angle(rng),
                qubit: rng.gen_range(0..n),
            },
            _ => {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                Gate::cnot(a, b)
            }
        };
        c.push_unchecked(g);
    }
    c
}

/// Random circuit of CNOTs and Rz gates only.
pub fn random_cnot_rz_circuit(n: usize, rz_gates: usize, cnot_gates: usize, rng: &mut impl Rng) -> Circuit {
    random_universal_circuit(n, 0, rz_gates, cnot_gates, rng)
}
