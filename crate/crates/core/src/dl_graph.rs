// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The slab of `DL(p, q)` spanning heights `0..=layers`.
//!
//! Vertex `(h, j, k)` pairs the orange vertex `j` at level `h` of `T_p` with
//! the brown vertex `k` of `T_q`. The brown tree is stored un-flipped, so
//! `k` lives at internal level `layers - h`: moving up in height walks
//! towards the brown root.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree_core::{checked_power, LayeredTree, TreeAddress};

/// Default bound on the number of vertices of a built graph.
pub const DEFAULT_VERTEX_CAP: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DLParams {
    p: u64,
    q: u64,
    layers: u32,
}

impl DLParams {
    pub fn new(p: u64, q: u64, layers: u32) -> Result<Self> {
        for b in [p, q] {
            if b < 2 {
                return Err(Error::InvalidBranching(b));
            }
        }
        if layers < 1 {
            return Err(Error::InvalidLayers(layers));
        }
        Ok(DLParams { p, q, layers })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn layers(&self) -> u32 {
        self.layers
    }

    /// Parameters of the graph with the roles of the two trees exchanged.
    pub fn dual(&self) -> DLParams {
        DLParams {
            p: self.q,
            q: self.p,
            layers: self.layers,
        }
    }

    /// `p^h · q^(L−h)`, the number of vertices at height `h`.
    pub fn height_count(&self, h: u32) -> Option<u64> {
        if h > self.layers {
            return Some(0);
        }
        checked_power(self.p, h)?.checked_mul(checked_power(self.q, self.layers - h)?)
    }

    /// `Σ_{n=0}^{L} p^n q^(L−n)`.
    pub fn expected_vertex_count(&self) -> Option<u64> {
        (0..=self.layers).try_fold(0u64, |acc, h| acc.checked_add(self.height_count(h)?))
    }

    /// `Σ_{n=1}^{L} p^n q^(L−n+1)`.
    pub fn expected_edge_count(&self) -> Option<u64> {
        (1..=self.layers).try_fold(0u64, |acc, h| {
            acc.checked_add(self.height_count(h)?.checked_mul(self.q)?)
        })
    }

    /// Degree forced on a vertex at height `h` of the slab.
    pub fn expected_degree(&self, h: u32) -> usize {
        let down = if h > 0 { self.q } else { 0 };
        let up = if h < self.layers { self.p } else { 0 };
        (down + up) as usize
    }
}

impl fmt::Display for DLParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},q={},L={}", self.p, self.q, self.layers)
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct DLVertex {
    pub height: u32,
    pub orange: u64,
    pub brown: u64,
}

impl DLVertex {
    pub const fn new(height: u32, orange: u64, brown: u64) -> Self {
        DLVertex {
            height,
            orange,
            brown,
        }
    }

    /// Orange component as an address of `T_p`.
    pub fn orange_address(&self) -> TreeAddress {
        TreeAddress::new(self.height, self.orange)
    }

    /// Brown component as an address of the un-flipped `T_q`.
    pub fn brown_address(&self, layers: u32) -> TreeAddress {
        TreeAddress::new(layers - self.height, self.brown)
    }

    /// Image under `(h, j, k) ↦ (L − h, k, j)`, a vertex of `DL(q, p)`.
    pub fn dual(&self, layers: u32) -> DLVertex {
        DLVertex::new(layers - self.height, self.brown, self.orange)
    }
}

impl fmt::Display for DLVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.height, self.orange, self.brown)
    }
}

/// Undirected edge, stored once. For edges of a built graph `upper` is the
/// endpoint one height above `lower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DLEdge {
    pub upper: DLVertex,
    pub lower: DLVertex,
}

impl DLEdge {
    /// Orients `{a, b}`: higher endpoint first, ties broken by vertex order.
    pub fn new(a: DLVertex, b: DLVertex) -> Self {
        let (upper, lower) = if a > b { (a, b) } else { (b, a) };
        DLEdge { upper, lower }
    }
}

impl fmt::Display for DLEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.upper, self.lower)
    }
}

/// Read-only view of a labelled graph on DL vertices. Verification runs
/// against this trait so that it can be pointed at deliberately corrupted
/// copies as well as at [`DLGraph`] itself.
pub trait Topology {
    fn params(&self) -> DLParams;
    /// All vertices in ascending `(height, orange, brown)` order.
    fn vertices(&self) -> Vec<DLVertex>;
    /// Sorted neighbours of `v`; empty for unknown vertices.
    fn adjacent(&self, v: DLVertex) -> Vec<DLVertex>;
    fn edge_list(&self) -> Vec<DLEdge>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DLGraph {
    params: DLParams,
    orange: LayeredTree,
    brown: LayeredTree,
    offsets: Vec<u64>,
}

impl DLGraph {
    pub fn build(params: DLParams) -> Result<Self> {
        Self::build_with_cap(params, DEFAULT_VERTEX_CAP)
    }

    pub fn build_with_cap(params: DLParams, cap: u64) -> Result<Self> {
        let total = params.expected_vertex_count();
        if !matches!(total, Some(n) if n <= cap) {
            return Err(Error::CapExceeded {
                what: "vertex count",
                count: total,
                cap,
            });
        }
        let orange = LayeredTree::with_level_cap(params.p, params.layers, cap)?;
        let brown = LayeredTree::with_level_cap(params.q, params.layers, cap)?;
        let mut offsets = Vec::with_capacity(params.layers as usize + 2);
        let mut acc = 0;
        for h in 0..=params.layers {
            offsets.push(acc);
            acc += params.height_count(h).expect("bounded by the vertex cap");
        }
        offsets.push(acc);
        Ok(DLGraph {
            params,
            orange,
            brown,
            offsets,
        })
    }

    pub fn params(&self) -> DLParams {
        self.params
    }

    pub fn orange_tree(&self) -> &LayeredTree {
        &self.orange
    }

    pub fn brown_tree(&self) -> &LayeredTree {
        &self.brown
    }

    pub fn layers(&self) -> u32 {
        self.params.layers
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets[self.offsets.len() - 1] as usize
    }

    pub fn edge_count(&self) -> usize {
        self.params
            .expected_edge_count()
            .expect("bounded by the vertex cap") as usize
    }

    /// Number of brown indices at height `h`.
    fn brown_width(&self, h: u32) -> u64 {
        self.brown.level_size(self.params.layers - h)
    }

    pub fn contains(&self, v: DLVertex) -> bool {
        v.height <= self.params.layers
            && v.orange < self.orange.level_size(v.height)
            && v.brown < self.brown_width(v.height)
    }

    fn check(&self, v: DLVertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Position of `v` in the deterministic vertex order.
    pub fn index_of(&self, v: DLVertex) -> Result<usize> {
        self.check(v)?;
        let base = self.offsets[v.height as usize];
        Ok((base + v.orange * self.brown_width(v.height) + v.brown) as usize)
    }

    pub fn vertex_at(&self, index: usize) -> Option<DLVertex> {
        let index = index as u64;
        let h = self.offsets.windows(2).position(|w| index >= w[0] && index < w[1])?;
        let rel = index - self.offsets[h];
        let width = self.brown_width(h as u32);
        Some(DLVertex::new(h as u32, rel / width, rel % width))
    }

    /// Every vertex in ascending `(height, orange, brown)` order.
    pub fn vertices(&self) -> impl Iterator<Item = DLVertex> + '_ {
        (0..=self.params.layers).flat_map(move |h| {
            let width = self.brown_width(h);
            (0..self.orange.level_size(h))
                .flat_map(move |j| (0..width).map(move |k| DLVertex::new(h, j, k)))
        })
    }

    /// Every edge once, upper endpoint first, ordered by upper endpoint and
    /// then by the brown child chosen on the way down.
    pub fn edges(&self) -> impl Iterator<Item = DLEdge> + '_ {
        let (p, q) = (self.params.p, self.params.q);
        self.vertices()
            .filter(|v| v.height >= 1)
            .flat_map(move |upper| {
                (0..q).map(move |c| DLEdge {
                    upper,
                    lower: DLVertex::new(upper.height - 1, upper.orange / p, upper.brown * q + c),
                })
            })
    }

    fn down_neighbors(&self, v: DLVertex) -> impl Iterator<Item = DLVertex> {
        let (p, q) = (self.params.p, self.params.q);
        let n = if v.height > 0 { q } else { 0 };
        (0..n).map(move |c| DLVertex::new(v.height - 1, v.orange / p, v.brown * q + c))
    }

    fn up_neighbors(&self, v: DLVertex) -> impl Iterator<Item = DLVertex> {
        let (p, q) = (self.params.p, self.params.q);
        let n = if v.height < self.params.layers { p } else { 0 };
        (0..n).map(move |c| DLVertex::new(v.height + 1, v.orange * p + c, v.brown / q))
    }

    /// Sorted neighbours: the `q` down-moves (keep the orange predecessor,
    /// pick a brown child) followed by the `p` up-moves (pick an orange
    /// child, keep the brown predecessor).
    pub fn neighbors(&self, v: DLVertex) -> Result<Vec<DLVertex>> {
        self.check(v)?;
        Ok(self.down_neighbors(v).chain(self.up_neighbors(v)).collect())
    }

    pub fn degree(&self, v: DLVertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.params.expected_degree(v.height))
    }

    /// Adjacency decided from the labels alone.
    pub fn is_edge(&self, a: DLVertex, b: DLVertex) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        let (top, bottom) = if a.height > b.height { (a, b) } else { (b, a) };
        Ok(top.height == bottom.height + 1
            && bottom.orange == top.orange / self.params.p
            && bottom.brown / self.params.q == top.brown)
    }

    /// Length of a shortest path inside the slab.
    pub fn bfs_distance(&self, a: DLVertex, b: DLVertex) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Ok(0);
        }
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[self.index_of(a)?] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            let d = dist[self.index_of(v)?];
            for w in self.down_neighbors(v).chain(self.up_neighbors(v)) {
                let slot = &mut dist[self.index_of(w)?];
                if *slot == u32::MAX {
                    if w == b {
                        return Ok(d + 1);
                    }
                    *slot = d + 1;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("the slab is connected")
    }

    pub fn census(&self) -> Census {
        census(self)
    }
}

impl Topology for DLGraph {
    fn params(&self) -> DLParams {
        self.params
    }

    fn vertices(&self) -> Vec<DLVertex> {
        DLGraph::vertices(self).collect()
    }

    fn adjacent(&self, v: DLVertex) -> Vec<DLVertex> {
        self.neighbors(v).unwrap_or_default()
    }

    fn edge_list(&self) -> Vec<DLEdge> {
        self.edges().collect()
    }
}

/// Materialized copy of a graph that can be edited, used for negative
/// controls in verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditableGraph {
    params: DLParams,
    adjacency: BTreeMap<DLVertex, BTreeSet<DLVertex>>,
}

impl EditableGraph {
    pub fn from_topology<G: Topology + ?Sized>(g: &G) -> Self {
        let adjacency = g
            .vertices()
            .into_iter()
            .map(|v| (v, g.adjacent(v).into_iter().collect()))
            .collect();
        EditableGraph {
            params: g.params(),
            adjacency,
        }
    }

    /// Returns whether the edge was present.
    pub fn remove_edge(&mut self, a: DLVertex, b: DLVertex) -> bool {
        let removed = self.adjacency.get_mut(&a).is_some_and(|s| s.remove(&b));
        if let Some(s) = self.adjacency.get_mut(&b) {
            s.remove(&a);
        }
        removed
    }

    /// Adds `{a, b}`, inserting unknown endpoints as new vertices. Returns
    /// whether the edge is new.
    pub fn add_edge(&mut self, a: DLVertex, b: DLVertex) -> bool {
        let added = self.adjacency.entry(a).or_default().insert(b);
        self.adjacency.entry(b).or_default().insert(a);
        added
    }

    pub fn add_vertex(&mut self, v: DLVertex) -> bool {
        if self.adjacency.contains_key(&v) {
            return false;
        }
        self.adjacency.insert(v, BTreeSet::new());
        true
    }
}

impl Topology for EditableGraph {
    fn params(&self) -> DLParams {
        self.params
    }

    fn vertices(&self) -> Vec<DLVertex> {
        self.adjacency.keys().copied().collect()
    }

    fn adjacent(&self, v: DLVertex) -> Vec<DLVertex> {
        self.adjacency
            .get(&v)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default()
    }

    fn edge_list(&self) -> Vec<DLEdge> {
        let mut edges: Vec<DLEdge> = self
            .adjacency
            .iter()
            .flat_map(|(&a, ns)| {
                ns.iter()
                    .filter(move |&&b| a <= b)
                    .map(move |&b| DLEdge::new(a, b))
            })
            .collect();
        edges.sort();
        edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub params: DLParams,
    /// Vertex counts by height, index 0 first.
    pub heights: Vec<u64>,
    pub vertices: u64,
    pub edges: u64,
    pub degree_histogram: BTreeMap<usize, u64>,
    pub degree_sum: u64,
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DL graph {}", self.params)?;
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        let heights: Vec<_> = self.heights.iter().map(u64::to_string).collect();
        writeln!(f, "vertices per height: [{}]", heights.join(", "))?;
        let hist: Vec<_> = self
            .degree_histogram
            .iter()
            .map(|(d, n)| format!("{d}:{n}"))
            .collect();
        writeln!(f, "degree histogram: {{{}}}", hist.join(", "))?;
        writeln!(f, "degree sum: {} (2|E| = {})", self.degree_sum, 2 * self.edges)
    }
}

/// Counts gathered by enumeration, never from closed forms.
pub fn census<G: Topology + ?Sized>(g: &G) -> Census {
    let params = g.params();
    let mut heights = vec![0u64; params.layers as usize + 1];
    let mut degree_histogram = BTreeMap::new();
    let mut degree_sum = 0u64;
    let vertices = g.vertices();
    for &v in &vertices {
        if let Some(slot) = heights.get_mut(v.height as usize) {
            *slot += 1;
        }
        let d = g.adjacent(v).len();
        *degree_histogram.entry(d).or_insert(0) += 1;
        degree_sum += d as u64;
    }
    Census {
        params,
        heights,
        vertices: vertices.len() as u64,
        edges: g.edge_list().len() as u64,
        degree_histogram,
        degree_sum,
    }
}

/// Breadth-first distances from `source` to every reachable vertex.
pub fn bfs_distances<G: Topology + ?Sized>(g: &G, source: DLVertex) -> HashMap<DLVertex, u32> {
    let mut dist = HashMap::from([(source, 0)]);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for w in g.adjacent(v) {
            dist.entry(w).or_insert_with(|| {
                queue.push_back(w);
                d + 1
            });
        }
    }
    dist
}
