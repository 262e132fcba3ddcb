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

//! Phase-polynomial synthesis for CNOT+Rz circuits, with and without
//! hardware connectivity constraints, plus a SWAP-routing baseline and
//! exact semantic oracles for checking every produced circuit.

pub mod angle;
pub mod bits;
pub mod circuit;
pub mod error;
pub mod graph;
pub mod io;
pub mod linear;
pub mod oracle;
pub mod poly;
pub mod random;
pub mod routing;
pub mod semantics;
pub mod synth;
pub mod universal;

pub use angle::{Angle, ANGLE_TOLERANCE};
pub use bits::BitVec;
pub use circuit::{cnot_count, cnot_depth, Circuit, Gate};
pub use error::{Error, Result};
pub use graph::{CouplingGraph, FamilyKind, GraphFamily, SpanningTree, SteinerTree, TreeMode};
pub use io::{ParseError, SourceSpan};
pub use linear::LinearFunction;
pub use oracle::{optimal_cnot_count, OptimalityCertificate};
pub use poly::{apply_cnot, hamming_weight, ParityMatrix, ParityTerm, PhasePolynomial};
pub use routing::{overhead_factor, route_swaps, RoutingReport};
pub use synth::{
    synthesize, synthesize_to, ConstrainedReport, DisconnectStats, Report, Strategy,
    SynthesisReport,
};
pub use universal::{resynthesize, same_segmentation, segment, Segmentation};
