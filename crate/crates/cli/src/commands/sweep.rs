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

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use paritysynth::io::Record;
use paritysynth::random::{instance_seed, seeded_polynomial};
use paritysynth::routing::identity_mapping;
use paritysynth::semantics::{check_connectivity, implements};
use paritysynth::{route_swaps, synthesize, CouplingGraph, FamilyKind, Strategy};
use rayon::prelude::*;

use super::single::unpermute;
use super::{emit_report, io_err, same_semantics, write_text};
use crate::args::{Format, SweepArgs};
use crate::stats::{median, power_law_exponent};
use crate::{load_graph, with_pool, CliError, CliResult, RunConfig};

/// One seeded instance of a sweep.
struct Task {
    label: String,
    graph: CouplingGraph,
    n: usize,
    g: usize,
    seed_index: u64,
    seed: u64,
}

/// Expands graph specs, sizes and seeds into tasks in a fixed order. A bare
/// family name is sized to each n; a full description is used only where its size
/// matches n.
fn tasks(a: &SweepArgs) -> CliResult<Vec<Task>> {
    let mut out = Vec::new();
    for desc in &a.graph {
        let family = (!desc.contains(':')).then(|| desc.parse::<FamilyKind>()).transpose()?;
        let fixed = match family {
            Some(_) => None,
            None => Some(load_graph(desc)?),
        };
        for &n in &a.n {
            let (graph, label) = match (&fixed, family) {
                (Some(g), _) if g.num_vertices() == n => (g.clone(), desc.clone()),
                (Some(_), _) => continue,
                (None, Some(k)) => (k.with_size(n)?, format!("{}:{n}", k.name())),
                (None, None) => unreachable!("either a family or a fixed graph"),
            };
            for &g in &a.g {
                for s in 0..a.seeds {
                    out.push(Task {
                        label: label.clone(),
                        graph: graph.clone(),
                        n,
                        g,
                        seed_index: s,
                        seed: instance_seed(a.seed, &[n as u64, g as u64, s]),
                    });
                }
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Input("the sweep is empty: no graph matches the requested sizes".into()));
    }
    Ok(out)
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn record(t: &Task, strategy: &str, cnots: usize, depth: usize, alpha: Option<f64>, violations: usize, wall: f64) -> Record {
    Record {
        instance: format!("{}/n{}g{}s{}", t.label, t.n, t.g, t.seed_index),
        seed: t.seed,
        n: t.n,
        g: t.g,
        graph: t.label.clone(),
        strategy: strategy.into(),
        cnots,
        depth,
        alpha,
        violations,
        wall_time_ms: wall,
    }
}

/// Unconstrained synthesis, the same circuit routed with SWAPs, and
/// constrained synthesis, for one instance. Returns the records and whether
/// every check passed.
fn compare_one(t: &Task, verify: bool) -> CliResult<(Vec<Record>, bool)> {
    let poly = seeded_polynomial(t.n, t.g, t.seed)?;
    let start = Instant::now();
    let free = synthesize(&poly, Strategy::Recursive, None)?;
    let free_ms = ms(start);
    let start = Instant::now();
    let routed = route_swaps(free.circuit(), &t.graph, &identity_mapping(t.n))?;
    let route_ms = ms(start) + free_ms;
    let start = Instant::now();
    let tied = synthesize(&poly, Strategy::Dfs, Some(&t.graph))?;
    let tied_ms = ms(start);

    let base = free.cnots();
    let ratio = |c: usize| (base > 0).then(|| c as f64 / base as f64);
    let expanded = routed.routed_circuit.expand_swaps();
    let routed_viol = check_connectivity(&expanded, &t.graph).len();
    let tied_viol = check_connectivity(tied.circuit(), &t.graph).len();
    let mut ok = routed_viol == 0 && tied_viol == 0;
    if verify {
        ok &= implements(free.circuit(), &poly)?;
        ok &= implements(tied.circuit(), &poly)?;
        ok &= same_semantics(free.circuit(), &unpermute(&routed.routed_circuit, &routed.final_mapping))?;
    }
    let records = vec![
        record(t, "recursive", base, free.synthesis().depth, None, check_connectivity(free.circuit(), &t.graph).len(), free_ms),
        record(t, "recursive+swap", routed.c_routed, expanded.cnot_depth(), ratio(routed.c_routed), routed_viol, route_ms),
        record(t, "dfs", tied.cnots(), tied.synthesis().depth, ratio(tied.cnots()), tied_viol, tied_ms),
    ];
    Ok((records, ok))
}

fn run_all<F>(tasks: &[Task], f: F) -> CliResult<(Vec<Record>, bool)>
where
    F: Fn(&Task) -> CliResult<(Vec<Record>, bool)> + Sync,
{
    let results: Vec<CliResult<(Vec<Record>, bool)>> = with_pool(|| tasks.par_iter().map(&f).collect())?;
    let mut records = Vec::new();
    let mut ok = true;
    for r in results {
        let (recs, good) = r?;
        records.extend(recs);
        ok &= good;
    }
    Ok((records, ok))
}

fn finish(a: &SweepArgs, out: &mut dyn Write, config: RunConfig, records: &[Record], summary: String) -> CliResult<()> {
    match &a.out {
        Some(path) => {
            let mut buf = Vec::new();
            emit_report(&mut buf, a.format, &config, records)?;
            write_text(path, &String::from_utf8(buf).expect("reports are UTF-8"))?;
            out.write_all(summary.as_bytes()).map_err(io_err)
        }
        None => {
            emit_report(out, a.format, &config, records)?;
            if a.format == Format::Table {
                out.write_all(summary.as_bytes()).map_err(io_err)?;
            }
            Ok(())
        }
    }
}

type Cell = (String, usize, usize);

pub(super) fn compare(a: &SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    let tasks = tasks(a)?;
    let (records, ok) = run_all(&tasks, |t| compare_one(t, a.verify))?;

    // per (graph, n, g): routed alphas, constrained ratios, constrained wins
    let mut cells: BTreeMap<Cell, (Vec<f64>, Vec<f64>, usize, usize)> = BTreeMap::new();
    for trio in records.chunks(3) {
        let [_, routed, tied] = trio else { unreachable!("three records per instance") };
        let e = cells.entry((routed.graph.clone(), routed.n, routed.g)).or_default();
        e.0.extend(routed.alpha);
        e.1.extend(tied.alpha);
        e.2 += usize::from(tied.cnots < routed.cnots);
        e.3 += 1;
    }
    let mut summary = String::from("\ngraph  n  g  median_alpha_routed  median_ratio_constrained  constrained_wins\n");
    for ((graph, n, g), (alphas, ratios, wins, total)) in &cells {
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
        writeln!(summary, "{graph}  {n}  {g}  {}  {}  {wins}/{total}", fmt(median(alphas)), fmt(median(ratios)))
            .expect("writing to a String");
    }
    finish(a, out, RunConfig::new("compare", a), &records, summary)?;
    if !ok {
        return Err(CliError::Verify("an instance failed its equivalence or connectivity check".into()));
    }
    Ok(())
}

fn bench_one(t: &Task, strategies: &[Strategy], verify: bool) -> CliResult<(Vec<Record>, bool)> {
    let poly = seeded_polynomial(t.n, t.g, t.seed)?;
    let mut records = Vec::new();
    let mut ok = true;
    for &s in strategies {
        let start = Instant::now();
        let r = synthesize(&poly, s, Some(&t.graph))?;
        let wall = ms(start);
        let violations = check_connectivity(r.circuit(), &t.graph).len();
        if s.is_constrained() {
            ok &= violations == 0;
        }
        if verify {
            ok &= implements(r.circuit(), &poly)?;
        }
        records.push(record(t, s.name(), r.cnots(), r.synthesis().depth, None, violations, wall));
    }
    Ok((records, ok))
}

pub(super) fn bench(a: &SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    let strategies = a
        .strategy
        .iter()
        .map(|s| s.parse::<Strategy>())
        .collect::<Result<Vec<_>, _>>()?;
    let tasks = tasks(a)?;
    let (records, ok) = run_all(&tasks, |t| bench_one(t, &strategies, a.verify))?;

    // median cnots per (family, strategy, n, g)
    let mut samples: BTreeMap<(String, String, usize, usize), Vec<f64>> = BTreeMap::new();
    for r in &records {
        let family = r.graph.split(':').next().unwrap_or("").to_string();
        samples.entry((family, r.strategy.clone(), r.n, r.g)).or_default().push(r.cnots as f64);
    }
    let medians: BTreeMap<_, f64> = samples.iter().filter_map(|(k, v)| median(v).map(|m| (k.clone(), m))).collect();
    let mut summary = String::from("\nscaling fits (least-squares exponent of median cnots)\n");
    let groups: std::collections::BTreeSet<(String, String)> = medians.keys().map(|k| (k.0.clone(), k.1.clone())).collect();
    for (family, strategy) in &groups {
        let pts = |fixed_n: Option<usize>, fixed_g: Option<usize>| -> Vec<(f64, f64)> {
            medians
                .iter()
                .filter(|(k, _)| &k.0 == family && &k.1 == strategy)
                .filter(|(k, _)| fixed_n.is_none_or(|n| k.2 == n) && fixed_g.is_none_or(|g| k.3 == g))
                .map(|(k, &m)| if fixed_n.is_some() { (k.3 as f64, m) } else { (k.2 as f64, m) })
                .collect()
        };
        for &n in &a.n {
            if let Some(e) = power_law_exponent(&pts(Some(n), None)) {
                writeln!(summary, "{family} {strategy} n={n}: cnots ~ g^{e:.3}").expect("writing to a String");
            }
        }
        for &g in &a.g {
            if let Some(e) = power_law_exponent(&pts(None, Some(g))) {
                writeln!(summary, "{family} {strategy} g={g}: cnots ~ n^{e:.3}").expect("writing to a String");
            }
        }
    }
    finish(a, out, RunConfig::new("bench", a), &records, summary)?;
    if !ok {
        return Err(CliError::Verify("an instance failed its equivalence or connectivity check".into()));
    }
    Ok(())
}
