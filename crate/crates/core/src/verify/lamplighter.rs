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

//! The lamplighter slab and its digit-encoding bijection with `DL(b, b)`.
//!
//! A slab state is a lamp configuration `f: {0..L−1} → ℤ/bℤ` together with
//! a cursor in `0..=L`. States `(f, c)` and `(f′, c + 1)` are adjacent when
//! `f′` agrees with `f` except possibly at position `c`. The DL vertex
//! `(h, j, k)` maps to the configuration whose lamps below the cursor `h`
//! spell the orange index `j` (most significant digit at position 0) and
//! whose lamps from `h` upwards spell the brown index `k` (least
//! significant digit at position `h`).

use std::collections::BTreeSet;
use std::fmt;

use crate::dl_graph::{DLParams, DLVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampState {
    /// `Σ f(i)·b^i`.
    pub lamps: u64,
    pub cursor: u32,
}

impl fmt::Display for LampState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(lamps={}, cursor={})", self.lamps, self.cursor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lamplighter {
    base: u64,
    layers: u32,
}

impl Lamplighter {
    pub fn new(base: u64, layers: u32) -> Self {
        Lamplighter { base, layers }
    }

    /// The slab matching `DL(b, b)`, or `None` when `p ≠ q`.
    pub fn for_params(params: &DLParams) -> Option<Self> {
        (params.p() == params.q()).then(|| Lamplighter::new(params.p(), params.layers()))
    }

    pub fn configurations(&self) -> u64 {
        self.base.pow(self.layers)
    }

    pub fn lamp(&self, state: LampState, position: u32) -> u64 {
        state.lamps / self.base.pow(position) % self.base
    }

    fn with_lamp(&self, lamps: u64, position: u32, value: u64) -> u64 {
        let w = self.base.pow(position);
        lamps - (lamps / w % self.base) * w + value * w
    }

    pub fn states(&self) -> impl Iterator<Item = LampState> + '_ {
        (0..=self.layers).flat_map(move |cursor| {
            (0..self.configurations()).map(move |lamps| LampState { lamps, cursor })
        })
    }

    /// Each edge once, lower cursor first.
    pub fn edges(&self) -> BTreeSet<(LampState, LampState)> {
        let mut out = BTreeSet::new();
        for cursor in 0..self.layers {
            for lamps in 0..self.configurations() {
                let from = LampState { lamps, cursor };
                for value in 0..self.base {
                    let to = LampState {
                        lamps: self.with_lamp(lamps, cursor, value),
                        cursor: cursor + 1,
                    };
                    out.insert((from, to));
                }
            }
        }
        out
    }

    /// Digit encoding of a DL vertex; `None` when the vertex lies outside
    /// the slab.
    pub fn encode(&self, v: DLVertex) -> Option<LampState> {
        let (b, h, l) = (self.base, v.height, self.layers);
        if h > l || v.orange >= b.pow(h) || v.brown >= b.pow(l - h) {
            return None;
        }
        let mut lamps = 0;
        for i in 0..l {
            let digit = if i < h {
                v.orange / b.pow(h - 1 - i) % b
            } else {
                v.brown / b.pow(i - h) % b
            };
            lamps += digit * b.pow(i);
        }
        Some(LampState { lamps, cursor: h })
    }

    /// Inverse of [`Lamplighter::encode`].
    pub fn decode(&self, s: LampState) -> DLVertex {
        let (b, h, l) = (self.base, s.cursor, self.layers);
        let orange = (0..h).fold(0, |acc, i| acc * b + self.lamp(s, i));
        let brown = (h..l).rev().fold(0, |acc, i| acc * b + self.lamp(s, i));
        DLVertex::new(h, orange, brown)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dl_graph::DLGraph;

    #[test]
    fn small_slabs() {
        let lamp = Lamplighter::new(2, 1);
        assert_eq!(lamp.states().count(), 4);
        assert_eq!(lamp.edges().len(), 4);
        let lamp = Lamplighter::new(2, 4);
        assert_eq!(lamp.states().count(), 80);
        assert_eq!(lamp.edges().len(), 4 * 32);
    }

    #[test]
    fn encode_decode_round_trip() {
        for (b, l) in [(2, 4), (3, 3)] {
            let lamp = Lamplighter::new(b, l);
            let g = DLGraph::build(DLParams::new(b, b, l).unwrap()).unwrap();
            let mut seen = BTreeSet::new();
            for v in g.vertices() {
                let s = lamp.encode(v).unwrap();
                assert_eq!(lamp.decode(s), v);
                assert!(seen.insert(s));
            }
            assert_eq!(seen.len() as u64, (l as u64 + 1) * lamp.configurations());
            assert_eq!(lamp.encode(DLVertex::new(1, b, 0)), None);
        }
    }

    #[test]
    fn moves_set_the_lamp_under_the_cursor() {
        let (b, l) = (3, 3);
        let lamp = Lamplighter::new(b, l);
        let g = DLGraph::build(DLParams::new(b, b, l).unwrap()).unwrap();
        for v in g.vertices().step_by(5) {
            let s = lamp.encode(v).unwrap();
            for w in g.neighbors(v).unwrap() {
                let t = lamp.encode(w).unwrap();
                if w.height > v.height {
                    // up-move: orange child c' = w.orange mod b
                    assert_eq!(t.cursor, s.cursor + 1);
                    assert_eq!(lamp.lamp(t, s.cursor), w.orange % b);
                    for i in (0..l).filter(|&i| i != s.cursor) {
                        assert_eq!(lamp.lamp(t, i), lamp.lamp(s, i));
                    }
                } else {
                    // down-move: brown child c = w.brown mod b
                    assert_eq!(t.cursor + 1, s.cursor);
                    assert_eq!(lamp.lamp(t, s.cursor - 1), w.brown % b);
                    for i in (0..l).filter(|&i| i != s.cursor - 1) {
                        assert_eq!(lamp.lamp(t, i), lamp.lamp(s, i));
                    }
                }
            }
        }
    }
}
