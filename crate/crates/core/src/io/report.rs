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

use std::fmt::Write;

use serde::{Deserialize, Serialize};

/// One benchmark or synthesis result, serialized as a single JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub instance: String,
    pub seed: u64,
    pub n: usize,
    pub g: usize,
    pub graph: String,
    pub strategy: String,
    pub cnots: usize,
    pub depth: usize,
    /// Routed count over baseline count, where a baseline applies.
    pub alpha: Option<f64>,
    pub violations: usize,
    pub wall_time_ms: f64,
}

impl Record {
    /// The record with its timing field zeroed, for determinism checks.
    pub fn without_timing(&self) -> Record {
        Record {
            wall_time_ms: 0.0,
            ..self.clone()
        }
    }
}

/// One JSON object per line.
pub fn emit_records(records: &[Record]) -> String {
    let mut s = String::new();
    for r in records {
        s.push_str(&serde_json::to_string(r).expect("records serialize"));
        s.push('\n');
    }
    s
}

pub fn parse_record(line: &str) -> Result<Record, serde_json::Error> {
    serde_json::from_str(line)
}

/// Fixed-width table with one row per record.
pub fn emit_table(records: &[Record]) -> String {
    let headers = ["instance", "seed", "n", "g", "graph", "strategy", "cnots", "depth", "alpha", "viol", "ms"];
    let rows: Vec<[String; 11]> = records
        .iter()
        .map(|r| {
            [
                r.instance.clone(),
                r.seed.to_string(),
                r.n.to_string(),
                r.g.to_string(),
                r.graph.clone(),
                r.strategy.clone(),
                r.cnots.to_string(),
                r.depth.to_string(),
                r.alpha.map_or("-".to_string(), |a| format!("{a:.3}")),
                r.violations.to_string(),
                format!("{:.2}", r.wall_time_ms),
            ]
        })
        .collect();
    let mut width: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut s = String::new();
    let line = |cells: Vec<&str>, s: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(s, "{}", padded.join("  ").trim_end()).expect("writing to a String");
    };
    line(headers.to_vec(), &mut s);
    for row in &rows {
        line(row.iter().map(String::as_str).collect(), &mut s);
    }
    s
}
