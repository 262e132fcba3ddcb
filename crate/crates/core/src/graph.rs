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

//! Coupling graphs, spanning trees and approximate Steiner trees.
//!
//! Every traversal visits neighbours in increasing index order, so all ties
//! resolve to the lowest vertex index and results are reproducible.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Undirected, connected qubit connectivity graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingGraph {
    adj: Vec<Vec<usize>>,
    adj_bits: Vec<BitVec>,
    edges: Vec<(usize, usize)>,
}

impl CouplingGraph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges,
    /// out-of-range vertices and disconnected graphs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut adj_bits = vec![BitVec::zeros(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            if adj_bits[u].get(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            adj_bits[u].set(v, true);
            adj_bits[v].set(u, true);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        let adj = adj_bits.iter().map(|b| b.iter_ones().collect()).collect();
        let g = Self {
            adj,
            adj_bits,
            edges: list,
        };
        if !g.is_connected_within(&BitVec::ones(n)) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn line(n: usize) -> Result<Self> {
        positive(n)?;
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn ring(n: usize) -> Result<Self> {
        positive(n)?;
        if n < 3 {
            return Self::line(n);
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        positive(n)?;
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// `width x height` grid, vertex `(x, y)` at index `y * width + x`.
    pub fn grid(width: usize, height: usize) -> Result<Self> {
        positive(width)?;
        positive(height)?;
        let idx = |x: usize, y: usize| y * width + x;
        let mut edges = Vec::new();
        for y in 0..height {
            for x in 0..width {
                if x + 1 < width {
                    edges.push((idx(x, y), idx(x + 1, y)));
                }
                if y + 1 < height {
                    edges.push((idx(x, y), idx(x, y + 1)));
                }
            }
        }
        Self::new(width * height, edges)
    }

    /// Heavy-hexagon lattice: a `scale x scale` honeycomb in brick-wall layout
    /// with an extra qubit placed on every edge.
    pub fn heavy_hex(scale: usize) -> Result<Self> {
        positive(scale)?;
        let rows = scale + 1;
        let cols = 2 * scale + 1;
        let idx = |r: usize, c: usize| r * cols + c;
        let mut base = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    base.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < rows && (r + c) % 2 == 0 {
                    base.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        let mut n = rows * cols;
        let mut edges = Vec::with_capacity(2 * base.len());
        for (u, v) in base {
            edges.push((u, n));
            edges.push((n, v));
            n += 1;
        }
        Self::new(n, edges)
    }

    /// Uniform random recursive tree: vertex `i` attaches to a random earlier vertex.
    pub fn random_tree(n: usize, seed: u64) -> Result<Self> {
        positive(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::new(n, (1..n).map(|i| (rng.gen_range(0..i), i)))
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < self.adj.len() && self.adj_bits[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.num_vertices();
        self.num_edges() == n * (n - 1) / 2
    }

    /// Relabels the first `n` vertices in BFS order from vertex 0 and returns
    /// the induced subgraph on them, which is always connected.
    pub fn bfs_prefix(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.num_vertices() {
            return Err(Error::InvalidGraph(format!(
                "cannot take {n} vertices from a graph with {}",
                self.num_vertices()
            )));
        }
        let order = self.bfs_order(0, &BitVec::ones(self.num_vertices()));
        let mut label = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in order.iter().take(n).enumerate() {
            label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] < n && label[v] < n)
            .map(|&(u, v)| (label[u], label[v]));
        Self::new(n, edges)
    }

    fn bfs_order(&self, root: usize, alive: &BitVec) -> Vec<usize> {
        let mut seen = BitVec::zeros(self.num_vertices());
        let mut order = vec![root];
        seen.set(root, true);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adj[u] {
                if alive.get(w) && !seen.get(w) {
                    seen.set(w, true);
                    order.push(w);
                }
            }
        }
        order
    }

    /// Whether the subgraph induced by `alive` is connected (vacuously true when empty).
    pub fn is_connected_within(&self, alive: &BitVec) -> bool {
        match alive.first_one() {
            None => true,
            Some(r) => self.bfs_order(r, alive).len() == alive.count_ones(),
        }
    }

    /// Minimum-hop path from `a` to `b`, inclusive of both ends.
    pub fn shortest_path(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        self.shortest_path_within(a, b, &BitVec::ones(self.num_vertices()))
    }

    pub fn shortest_path_within(&self, a: usize, b: usize, alive: &BitVec) -> Result<Vec<usize>> {
        let n = self.num_vertices();
        for q in [a, b] {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q, n });
            }
        }
        let parent = self.bfs_parents(&[a], alive);
        if a != b && parent[b].is_none() {
            return Err(Error::Disconnected);
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v].expect("reachable");
            path.push(v);
        }
        path.reverse();
        Ok(path)
    }

    /// Multi-source BFS parents; sources have no parent.
    fn bfs_parents(&self, sources: &[usize], alive: &BitVec) -> Vec<Option<usize>> {
        let n = self.num_vertices();
        let mut parent = vec![None; n];
        let mut seen = BitVec::zeros(n);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in sources {
            seen.set(s, true);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if alive.get(w) && !seen.get(w) {
                    seen.set(w, true);
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    fn distances(&self, sources: &[usize], alive: &BitVec) -> Vec<Option<usize>> {
        let n = self.num_vertices();
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if alive.get(w) && dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS spanning tree rooted at `root`.
    pub fn spanning_tree(&self, root: usize) -> Result<SpanningTree> {
        self.spanning_tree_with(root, TreeMode::Bfs)
    }

    pub fn spanning_tree_with(&self, root: usize, mode: TreeMode) -> Result<SpanningTree> {
        self.spanning_tree_within(root, &BitVec::ones(self.num_vertices()), mode)
    }

    /// Spanning tree of the subgraph induced by `alive`, rooted at `root`.
    pub fn spanning_tree_within(
        &self,
        root: usize,
        alive: &BitVec,
        mode: TreeMode,
    ) -> Result<SpanningTree> {
        let n = self.num_vertices();
        if root >= n || !alive.get(root) {
            return Err(Error::QubitOutOfRange { qubit: root, n });
        }
        let parent = match mode {
            TreeMode::Bfs => self.bfs_parents(&[root], alive),
            TreeMode::Dfs => {
                let mut parent = vec![None; n];
                let mut seen = BitVec::zeros(n);
                seen.set(root, true);
                let mut stack = vec![(root, 0usize)];
                while let Some((u, k)) = stack.last_mut() {
                    let u = *u;
                    if let Some(&w) = self.adj[u][*k..].first() {
                        *k += 1;
                        if alive.get(w) && !seen.get(w) {
                            seen.set(w, true);
                            parent[w] = Some(u);
                            stack.push((w, 0));
                        }
                    } else {
                        stack.pop();
                    }
                }
                parent
            }
        };
        let reached = 1 + parent.iter().filter(|p| p.is_some()).count();
        if reached != alive.count_ones() {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree::from_parents(root, parent))
    }

    /// Approximate Steiner tree over `terminals` using the nearest-terminal
    /// shortest-path heuristic, grown from the lowest-index terminal.
    pub fn steiner_tree(&self, terminals: &[usize]) -> Result<SteinerTree> {
        self.steiner_tree_within(terminals, &BitVec::ones(self.num_vertices()))
    }

    pub fn steiner_tree_within(&self, terminals: &[usize], alive: &BitVec) -> Result<SteinerTree> {
        let n = self.num_vertices();
        let mut terms: Vec<usize> = terminals.to_vec();
        terms.sort_unstable();
        terms.dedup();
        let Some(&first) = terms.first() else {
            return Err(Error::InvalidGraph("Steiner tree needs at least one terminal".into()));
        };
        for &t in &terms {
            if t >= n || !alive.get(t) {
                return Err(Error::QubitOutOfRange { qubit: t, n });
            }
        }
        let mut in_tree = BitVec::zeros(n);
        in_tree.set(first, true);
        let mut tree_vertices = vec![first];
        let mut edges = Vec::new();
        let mut remaining: Vec<usize> = terms[1..].to_vec();
        while !remaining.is_empty() {
            let dist = self.distances(&tree_vertices, alive);
            let (pos, &next) = remaining
                .iter()
                .enumerate()
                .filter(|(_, &t)| dist[t].is_some())
                .min_by_key(|(_, &t)| (dist[t].unwrap(), t))
                .ok_or(Error::Disconnected)?;
            let parent = self.bfs_parents(&tree_vertices, alive);
            let mut v = next;
            while !in_tree.get(v) {
                let p = parent[v].expect("reachable");
                edges.push((p.min(v), p.max(v)));
                in_tree.set(v, true);
                tree_vertices.push(v);
                v = p;
            }
            tree_vertices.sort_unstable();
            remaining.remove(pos);
            remaining.retain(|&t| !in_tree.get(t));
        }
        edges.sort_unstable();
        let steiner_nodes = tree_vertices
            .iter()
            .copied()
            .filter(|v| terms.binary_search(v).is_err())
            .collect();
        Ok(SteinerTree {
            terminals: terms,
            vertices: tree_vertices,
            edges,
            steiner_nodes,
        })
    }
}

fn positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidGraph("sizes must be positive".into()))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeMode {
    #[default]
    Bfs,
    /// Depth-first tree; on a line graph rooted at an end this is the path itself.
    Dfs,
}

/// A rooted spanning tree over (a subset of) the coupling graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl SpanningTree {
    fn from_parents(root: usize, parent: Vec<Option<usize>>) -> Self {
        let mut children = vec![Vec::new(); parent.len()];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(v);
            }
        }
        Self {
            root,
            parent,
            children,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in the tree, root first then BFS order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.root];
        let mut head = 0;
        while head < out.len() {
            let v = out[head];
            head += 1;
            out.extend_from_slice(&self.children[v]);
        }
        out
    }

    /// Tree edges as `(parent, child)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect()
    }
}

/// A tree connecting a terminal set; non-terminal vertices are Steiner nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerTree {
    pub terminals: Vec<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub steiner_nodes: Vec<usize>,
}

impl SteinerTree {
    /// `(child, parent)` pairs in post-order when the tree hangs from `root`:
    /// every child appears before its parent.
    pub fn postorder_from(&self, root: usize) -> Vec<(usize, usize)> {
        let adj = |v: usize| {
            let mut out: Vec<usize> = self
                .edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            out.sort_unstable();
            out
        };
        let mut out = Vec::with_capacity(self.edges.len());
        // iterative DFS emitting edges on the way back up
        let mut stack: Vec<(usize, Option<usize>, Vec<usize>, usize)> =
            vec![(root, None, adj(root), 0)];
        while let Some(top) = stack.last_mut() {
            let (v, p) = (top.0, top.1);
            if top.3 < top.2.len() {
                let w = top.2[top.3];
                top.3 += 1;
                if Some(w) != p {
                    let nbrs = adj(w);
                    stack.push((w, Some(v), nbrs, 0));
                }
            } else {
                stack.pop();
                if let Some(p) = p {
                    out.push((v, p));
                }
            }
        }
        out
    }

    pub fn is_steiner_node(&self, v: usize) -> bool {
        self.steiner_nodes.binary_search(&v).is_ok()
    }
}

/// A named graph family with its size parameters, as written on the command
/// line: `line:16`, `ring:12`, `grid:4x4`, `heavyhex:2`, `complete:8`,
/// `randomtree:16:seed7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Line(usize),
    Ring(usize),
    Grid(usize, usize),
    HeavyHex(usize),
    Complete(usize),
    RandomTree { n: usize, seed: u64 },
}

impl GraphFamily {
    pub fn build(&self) -> Result<CouplingGraph> {
        match *self {
            GraphFamily::Line(n) => CouplingGraph::line(n),
            GraphFamily::Ring(n) => CouplingGraph::ring(n),
            GraphFamily::Grid(w, h) => CouplingGraph::grid(w, h),
            GraphFamily::HeavyHex(s) => CouplingGraph::heavy_hex(s),
            GraphFamily::Complete(n) => CouplingGraph::complete(n),
            GraphFamily::RandomTree { n, seed } => CouplingGraph::random_tree(n, seed),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Line(n) => write!(f, "line:{n}"),
            GraphFamily::Ring(n) => write!(f, "ring:{n}"),
            GraphFamily::Grid(w, h) => write!(f, "grid:{w}x{h}"),
            GraphFamily::HeavyHex(s) => write!(f, "heavyhex:{s}"),
            GraphFamily::Complete(n) => write!(f, "complete:{n}"),
            GraphFamily::RandomTree { n, seed } => write!(f, "randomtree:{n}:seed{seed}"),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGraph(format!("cannot parse graph family `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(bad)?;
        let args: Vec<&str> = parts.collect();
        let fam = match (name, args.as_slice()) {
            ("line", [n]) => GraphFamily::Line(num(n)?),
            ("ring", [n]) => GraphFamily::Ring(num(n)?),
            ("complete", [n]) => GraphFamily::Complete(num(n)?),
            ("heavyhex", [s]) => GraphFamily::HeavyHex(num(s)?),
            ("grid", [dims]) => {
                let (w, h) = dims.split_once('x').ok_or_else(bad)?;
                GraphFamily::Grid(num(w)?, num(h)?)
            }
            ("randomtree", [n, seed]) => GraphFamily::RandomTree {
                n: num(n)?,
                seed: seed
                    .strip_prefix("seed")
                    .unwrap_or(seed)
                    .parse()
                    .map_err(|_| bad())?,
            },
            (other, _) => {
                return Err(Error::InvalidGraph(format!("unknown graph family `{other}`")))
            }
        };
        let sizes_ok = match fam {
            GraphFamily::Line(n)
            | GraphFamily::Ring(n)
            | GraphFamily::Complete(n)
            | GraphFamily::HeavyHex(n)
            | GraphFamily::RandomTree { n, .. } => n > 0,
            GraphFamily::Grid(w, h) => w > 0 && h > 0,
        };
        if !sizes_ok {
            return Err(Error::InvalidGraph(format!("non-positive size in `{s}`")));
        }
        Ok(fam)
    }
}

/// Builds the coupling graph from a family description such as `grid:3x4`.
pub fn graph_family(desc: &str) -> Result<CouplingGraph> {
    desc.parse::<GraphFamily>()?.build()
}

/// Family kinds that can be instantiated at an arbitrary qubit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Line,
    Ring,
    Grid,
    HeavyHex,
    Complete,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Complete,
        FamilyKind::Line,
        FamilyKind::Ring,
        FamilyKind::Grid,
        FamilyKind::HeavyHex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Line => "line",
            FamilyKind::Ring => "ring",
            FamilyKind::Grid => "grid",
            FamilyKind::HeavyHex => "heavyhex",
            FamilyKind::Complete => "complete",
        }
    }

    /// A connected `n`-vertex member of the family. Grids and heavy-hex
    /// lattices that do not fit exactly are cut down to a BFS prefix.
    pub fn with_size(self, n: usize) -> Result<CouplingGraph> {
        match self {
            FamilyKind::Line => CouplingGraph::line(n),
            FamilyKind::Ring => CouplingGraph::ring(n),
            FamilyKind::Complete => CouplingGraph::complete(n),
            FamilyKind::Grid => {
                let w = (1..=n).find(|w| w * w >= n).unwrap_or(1);
                if n.is_multiple_of(w) {
                    CouplingGraph::grid(w, n / w)
                } else {
                    CouplingGraph::grid(w, w)?.bfs_prefix(n)
                }
            }
            FamilyKind::HeavyHex => {
                let mut s = 1;
                while CouplingGraph::heavy_hex(s)?.num_vertices() < n {
                    s += 1;
                }
                CouplingGraph::heavy_hex(s)?.bfs_prefix(n)
            }
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown graph family `{s}`")))
    }
}
