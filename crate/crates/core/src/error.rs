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

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("two-qubit operation needs distinct operands, got {0} and {0}")]
    EqualOperands(usize),
    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("invalid parity matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is singular over GF(2)")]
    Singular,
    #[error("coupling graph is disconnected")]
    Disconnected,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unsupported gate `{0}` for this operation")]
    UnsupportedGate(&'static str),
    #[error("spanning tree is rooted at {root}, expected {expected}")]
    WrongRoot { root: usize, expected: usize },
    #[error("mapping is not a bijection on {0} qubits")]
    NotBijective(usize),
    #[error("routing overhead is undefined for a zero baseline")]
    ZeroBaseline,
    #[error("{n} qubits exceeds the capacity of {max}")]
    Capacity { n: usize, max: usize },
    #[error("too many terms: {g} distinct parities requested on {n} qubits")]
    TooManyTerms { g: usize, n: usize },
    #[error("search budget {budget} exceeds the limit of {max}")]
    Budget { budget: usize, max: usize },
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
