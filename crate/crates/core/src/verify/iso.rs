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

//! Rooted isomorphism of small induced subgraphs.
//!
//! Vertices carry an initial colour (here: distance from the ball centre).
//! Both graphs are refined together with colour refinement so that colours
//! are comparable across them, then a backtracking search extends a
//! colour-preserving partial map in BFS order.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::dl_graph::{DLVertex, Topology};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    labels: Vec<DLVertex>,
    colors: Vec<u32>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

impl SmallGraph {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[DLVertex] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Subgraph induced on the vertices within `radius` of `center`; vertex 0
/// is the centre and each vertex is coloured by its distance to it.
pub fn induced_ball<G: Topology + ?Sized>(g: &G, center: DLVertex, radius: u32) -> SmallGraph {
    let mut dist: HashMap<DLVertex, u32> = HashMap::from([(center, 0)]);
    let mut labels = vec![center];
    let mut queue = VecDeque::from([center]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for w in g.adjacent(v) {
            if !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                labels.push(w);
                queue.push_back(w);
            }
        }
    }
    let index: HashMap<DLVertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = labels.len();
    let mut adj = vec![vec![false; n]; n];
    let mut neighbors = vec![Vec::new(); n];
    for (i, &v) in labels.iter().enumerate() {
        for w in g.adjacent(v) {
            if let Some(&j) = index.get(&w) {
                if !adj[i][j] {
                    adj[i][j] = true;
                    neighbors[i].push(j);
                }
            }
        }
    }
    let colors = labels.iter().map(|v| dist[v]).collect();
    SmallGraph {
        labels,
        colors,
        adj,
        neighbors,
    }
}

/// Refines both colourings with a shared signature table until the number
/// of classes stops growing. Returns `None` as soon as the colour
/// histograms of the two graphs differ.
fn refine_jointly(a: &SmallGraph, b: &SmallGraph) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut ca = a.colors.clone();
    let mut cb = b.colors.clone();
    let mut classes = 0;
    loop {
        let mut table: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let signatures = |g: &SmallGraph, c: &[u32]| -> Vec<(u32, Vec<u32>)> {
            (0..g.len())
                .map(|i| {
                    let mut ns: Vec<u32> = g.neighbors[i].iter().map(|&j| c[j]).collect();
                    ns.sort_unstable();
                    (c[i], ns)
                })
                .collect()
        };
        let sa = signatures(a, &ca);
        let sb = signatures(b, &cb);
        for s in sa.iter().chain(&sb) {
            let next = table.len() as u32;
            table.entry(s.clone()).or_insert(next);
        }
        let na: Vec<u32> = sa.iter().map(|s| table[s]).collect();
        let nb: Vec<u32> = sb.iter().map(|s| table[s]).collect();
        if histogram(&na) != histogram(&nb) {
            return None;
        }
        ca = na;
        cb = nb;
        if table.len() == classes {
            return Some((ca, cb));
        }
        classes = table.len();
    }
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// A colour-preserving isomorphism from `a` onto `b`, as `map[i]` = image
/// of vertex `i` of `a`.
pub fn find_isomorphism(a: &SmallGraph, b: &SmallGraph) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    let (ca, cb) = refine_jointly(a, b)?;

    // BFS order over a so each vertex after the first has a mapped neighbour
    let mut order = Vec::with_capacity(a.len());
    let mut placed = vec![false; a.len()];
    for start in 0..a.len() {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let base = order.len();
        order.push(start);
        let mut head = base;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &a.neighbors[v] {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut by_color: HashMap<u32, Vec<usize>> = HashMap::new();
    for (j, &c) in cb.iter().enumerate() {
        by_color.entry(c).or_default().push(j);
    }
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    let search = Search {
        a,
        b,
        ca: &ca,
        by_color: &by_color,
        order: &order,
    };
    search.extend(0, &mut map, &mut used).then_some(map)
}

struct Search<'a> {
    a: &'a SmallGraph,
    b: &'a SmallGraph,
    ca: &'a [u32],
    by_color: &'a HashMap<u32, Vec<usize>>,
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let Some(candidates) = self.by_color.get(&self.ca[v]) else {
            return false;
        };
        for &w in candidates {
            if used[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.a.adj[v][u] == self.b.adj[w][map[u]]);
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
}

pub fn are_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dl_graph::{DLGraph, DLParams, EditableGraph};

    fn v(h: u32, j: u64, k: u64) -> DLVertex {
        DLVertex::new(h, j, k)
    }

    #[test]
    fn ball_sizes() {
        let g = DLGraph::build(DLParams::new(2, 3, 4).unwrap()).unwrap();
        let ball = induced_ball(&g, v(2, 1, 3), 1);
        assert_eq!(ball.len(), 1 + 2 + 3);
        assert_eq!(ball.edge_count(), 5);
        // 1 + p + q + p^2 + q^2 + (p - 1) + (q - 1)
        assert_eq!(induced_ball(&g, v(2, 1, 3), 2).len(), 1 + 5 + 4 + 9 + 1 + 2);
    }

    #[test]
    fn found_map_is_an_isomorphism() {
        let g = DLGraph::build(DLParams::new(3, 2, 5).unwrap()).unwrap();
        let a = induced_ball(&g, v(2, 0, 0), 2);
        let b = induced_ball(&g, v(3, 17, 1), 2);
        let map = find_isomorphism(&a, &b).unwrap();
        for i in 0..a.len() {
            for j in 0..a.len() {
                assert_eq!(a.adj[i][j], b.adj[map[i]][map[j]]);
            }
            assert_eq!(a.colors[i], b.colors[map[i]]);
        }
        assert_eq!(map[0], 0);
    }

    #[test]
    fn detects_non_isomorphic_balls() {
        let g = DLGraph::build(DLParams::new(2, 2, 4).unwrap()).unwrap();
        // boundary versus interior
        assert!(!are_isomorphic(&induced_ball(&g, v(0, 0, 0), 2), &induced_ball(&g, v(2, 0, 0), 2)));
        let mut e = EditableGraph::from_topology(&g);
        e.remove_edge(v(2, 1, 1), v(1, 0, 2));
        let clean = induced_ball(&g, v(2, 1, 1), 2);
        let broken = induced_ball(&e, v(2, 1, 1), 2);
        assert!(!are_isomorphic(&clean, &broken));
        // same size, rewired: swap one down edge for a same-height chord
        let mut e = EditableGraph::from_topology(&g);
        e.remove_edge(v(2, 1, 1), v(1, 0, 2));
        e.add_edge(v(2, 1, 1), v(2, 0, 1));
        let rewired = induced_ball(&e, v(2, 1, 1), 2);
        assert!(!are_isomorphic(&clean, &rewired));
    }
}
