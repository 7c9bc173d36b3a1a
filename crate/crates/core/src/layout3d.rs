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

//! Exact 3D coordinates for the two trees and the DL graph.
//!
//! The orange tree `T_p` lives in the plane `y = 0`, growing upwards: at
//! height `h` its nodes are `p^(L−h)` apart and the first one sits in the
//! middle of `[0, p^(L−h) − 1]`. The brown tree `T_q` lives in the plane
//! `x = 0` with the same rule mirrored (`q^h` apart at height `h`). A DL
//! vertex takes its `x` from its orange component and its `y` from its
//! brown component. Every coordinate is an integer or a half-integer, so
//! positions are stored as [`Half`] values and only rounded when printed.

use std::fmt;

use serde::Serialize;

use crate::dl_graph::{DLGraph, DLParams, DLVertex};
use crate::error::{Error, Result};
use crate::tree_core::{checked_power, TreeAddress};

/// A multiple of one half, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub const fn from_twice(twice: i64) -> Self {
        Half(twice)
    }

    pub const fn integer(n: i64) -> Self {
        Half(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    /// Exact: every half-integer in range is representable.
    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let mag = self.0.unsigned_abs();
        if mag % 2 == 0 {
            write!(f, "{sign}{}", mag / 2)
        } else {
            write!(f, "{sign}{}.5", mag / 2)
        }
    }
}

impl Serialize for Half {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point3 {
    pub x: Half,
    pub y: Half,
    pub z: Half,
}

impl Point3 {
    pub const fn new(x: Half, y: Half, z: Half) -> Self {
        Point3 { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Camera angles in degrees, as in pgfplots' `view={azimuth}{elevation}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct View {
    pub azimuth: f64,
    pub elevation: f64,
}

impl View {
    pub const fn new(azimuth: f64, elevation: f64) -> Self {
        View { azimuth, elevation }
    }
}

impl Default for View {
    fn default() -> Self {
        View::new(165.0, 10.0)
    }
}

/// Twice the coordinate of node `index` in a row whose nodes are `spacing`
/// apart and whose first node is centred on `[0, spacing − 1]`.
fn twice_row_coordinate(spacing: u64, index: u64) -> i64 {
    (spacing - 1 + 2 * index * spacing) as i64
}

fn height(h: u32) -> Half {
    Half::integer(i64::from(h))
}

fn bad_address(level: u32, index: u64) -> Error {
    Error::InvalidAddress { level, index }
}

/// Position of orange node `j` at height `h`:
/// `(p^(L−h)/2 − 0.5 + j·p^(L−h), 0, h)`.
pub fn orange_position(p: u64, layers: u32, h: u32, j: u64) -> Result<Point3> {
    if p < 2 {
        return Err(Error::InvalidBranching(p));
    }
    let width = (h <= layers).then(|| checked_power(p, h)).flatten();
    let spacing = (h <= layers).then(|| checked_power(p, layers - h)).flatten();
    match (width, spacing) {
        (Some(w), Some(s)) if j < w => Ok(Point3::new(
            Half(twice_row_coordinate(s, j)),
            Half::ZERO,
            height(h),
        )),
        _ => Err(bad_address(h, j)),
    }
}

/// Position of brown node `k` at height `h` (internal level `L − h`):
/// `(0, q^h/2 − 0.5 + k·q^h, h)`.
pub fn brown_position(q: u64, layers: u32, h: u32, k: u64) -> Result<Point3> {
    if q < 2 {
        return Err(Error::InvalidBranching(q));
    }
    let width = (h <= layers).then(|| checked_power(q, layers - h)).flatten();
    let spacing = (h <= layers).then(|| checked_power(q, h)).flatten();
    match (width, spacing) {
        (Some(w), Some(s)) if k < w => Ok(Point3::new(
            Half::ZERO,
            Half(twice_row_coordinate(s, k)),
            height(h),
        )),
        _ => Err(bad_address(layers.saturating_sub(h), k)),
    }
}

pub fn dl_position(params: &DLParams, v: DLVertex) -> Result<Point3> {
    let bad = || Error::InvalidVertex(v);
    let x = orange_position(params.p(), params.layers(), v.height, v.orange).map_err(|_| bad())?;
    let y = brown_position(params.q(), params.layers(), v.height, v.brown).map_err(|_| bad())?;
    Ok(Point3::new(x.x, y.y, height(v.height)))
}

fn invert_row(spacing: u64, twice: i64) -> Option<u64> {
    let shifted = twice.checked_sub(spacing as i64 - 1)?;
    let step = 2 * spacing as i64;
    (shifted >= 0 && shifted % step == 0).then(|| (shifted / step) as u64)
}

fn integer_height(z: Half, layers: u32) -> Option<u32> {
    let t = z.twice();
    (t >= 0 && t % 2 == 0 && t / 2 <= i64::from(layers)).then(|| (t / 2) as u32)
}

/// Recovers the orange address `(h, j)` drawn at `(x, 0, z)`.
pub fn invert_orange(p: u64, layers: u32, x: Half, z: Half) -> Option<TreeAddress> {
    let h = integer_height(z, layers)?;
    let j = invert_row(checked_power(p, layers - h)?, x.twice())?;
    (j < checked_power(p, h)?).then_some(TreeAddress::new(h, j))
}

/// Recovers `(h, k)` for the brown node drawn at `(0, y, z)`; the returned
/// address is in height coordinates, not internal tree levels.
pub fn invert_brown(q: u64, layers: u32, y: Half, z: Half) -> Option<TreeAddress> {
    let h = integer_height(z, layers)?;
    let k = invert_row(checked_power(q, h)?, y.twice())?;
    (k < checked_power(q, layers - h)?).then_some(TreeAddress::new(h, k))
}

/// Recovers the DL vertex drawn at `point`.
pub fn invert_dl(params: &DLParams, point: Point3) -> Option<DLVertex> {
    let o = invert_orange(params.p(), params.layers(), point.x, point.z)?;
    let b = invert_brown(params.q(), params.layers(), point.y, point.z)?;
    Some(DLVertex::new(o.level, o.index, b.index))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    TreeP,
    TreeQ,
    Dl,
}

impl SegmentKind {
    pub const ALL: [SegmentKind; 3] = [SegmentKind::TreeP, SegmentKind::TreeQ, SegmentKind::Dl];

    pub fn as_str(self) -> &'static str {
        match self {
            SegmentKind::TreeP => "tree_p",
            SegmentKind::TreeQ => "tree_q",
            SegmentKind::Dl => "dl",
        }
    }
}

/// A drawn edge. `upper` is the endpoint at the larger height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub upper: Point3,
    pub lower: Point3,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scene3D {
    pub params: DLParams,
    pub view: View,
    pub segments: Vec<Segment>,
}

impl Scene3D {
    pub fn count(&self, kind: SegmentKind) -> usize {
        self.segments.iter().filter(|s| s.kind == kind).count()
    }

    pub fn of_kind(&self, kind: SegmentKind) -> impl Iterator<Item = &Segment> + '_ {
        self.segments.iter().filter(move |s| s.kind == kind)
    }
}

/// Lays out `g` in drawing order. For each height `n = 1..=L`: every orange
/// edge between heights `n − 1` and `n` (parents left to right, then
/// children), followed by, for each brown parent at height `n` and each of
/// its children, the brown edge and the `p^n` DL edges sharing that brown
/// move.
pub fn build_scene(g: &DLGraph, view: View) -> Scene3D {
    let params = g.params();
    let (p, q, layers) = (params.p(), params.q(), params.layers());
    let orange = |h, j| orange_position(p, layers, h, j).expect("address inside the graph");
    let brown = |h, k| brown_position(q, layers, h, k).expect("address inside the graph");
    let mut segments =
        Vec::with_capacity(g.edge_count() + g.orange_tree().vertex_count() as usize * 2);
    for n in 1..=layers {
        for parent in 0..g.orange_tree().level_size(n - 1) {
            for child in 0..p {
                segments.push(Segment {
                    kind: SegmentKind::TreeP,
                    upper: orange(n, parent * p + child),
                    lower: orange(n - 1, parent),
                });
            }
        }
        for k in 0..g.brown_tree().level_size(layers - n) {
            let brown_top = brown(n, k);
            for child in 0..q {
                let brown_bottom = brown(n - 1, k * q + child);
                segments.push(Segment {
                    kind: SegmentKind::TreeQ,
                    upper: brown_top,
                    lower: brown_bottom,
                });
                for kk in 0..g.orange_tree().level_size(n - 1) {
                    let orange_bottom = orange(n - 1, kk);
                    for child_prime in 0..p {
                        let orange_top = orange(n, kk * p + child_prime);
                        segments.push(Segment {
                            kind: SegmentKind::Dl,
                            upper: Point3::new(orange_top.x, brown_top.y, height(n)),
                            lower: Point3::new(orange_bottom.x, brown_bottom.y, height(n - 1)),
                        });
                    }
                }
            }
        }
    }
    Scene3D {
        params,
        view,
        segments,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    use crate::dl_graph::DLEdge;

    fn pt(x: f64, y: f64, z: f64) -> Point3 {
        let h = |v: f64| Half::from_twice((v * 2.0) as i64);
        Point3::new(h(x), h(y), h(z))
    }

    fn scene(p: u64, q: u64, l: u32) -> Scene3D {
        let g = DLGraph::build(DLParams::new(p, q, l).unwrap()).unwrap();
        build_scene(&g, View::default())
    }

    #[test]
    fn half_display() {
        assert_eq!(Half::from_twice(7).to_string(), "3.5");
        assert_eq!(Half::from_twice(-1).to_string(), "-0.5");
        assert_eq!(Half::from_twice(-4).to_string(), "-2");
        assert_eq!(Half::ZERO.to_string(), "0");
        assert_eq!(pt(5.5, 0.0, 1.0).to_string(), "(5.5,0,1)");
    }

    #[test]
    fn orange_examples() {
        assert_eq!(orange_position(2, 3, 0, 0).unwrap(), pt(3.5, 0.0, 0.0));
        assert_eq!(orange_position(2, 3, 3, 5).unwrap(), pt(5.0, 0.0, 3.0));
        assert_eq!(orange_position(2, 3, 1, 1).unwrap(), pt(5.5, 0.0, 1.0));
        assert!(orange_position(2, 3, 1, 2).is_err());
        assert!(orange_position(2, 3, 4, 0).is_err());
    }

    #[test]
    fn brown_examples() {
        assert_eq!(brown_position(3, 3, 3, 0).unwrap(), pt(0.0, 13.0, 3.0));
        for k in 0..27 {
            assert_eq!(brown_position(3, 3, 0, k).unwrap(), pt(0.0, k as f64, 0.0));
        }
        assert_eq!(brown_position(3, 3, 1, 2).unwrap(), pt(0.0, 7.0, 1.0));
        assert!(brown_position(3, 3, 1, 9).is_err());
    }

    #[test]
    fn dl_examples() {
        let params = DLParams::new(2, 3, 3).unwrap();
        assert_eq!(dl_position(&params, DLVertex::new(3, 5, 0)).unwrap(), pt(5.0, 13.0, 3.0));
        for k in 0..27 {
            assert_eq!(dl_position(&params, DLVertex::new(0, 0, k)).unwrap(), pt(3.5, k as f64, 0.0));
        }
        let g = DLGraph::build(params).unwrap();
        for v in g.vertices() {
            let d = dl_position(&params, v).unwrap();
            assert_eq!(d.x, orange_position(2, 3, v.height, v.orange).unwrap().x);
            assert_eq!(d.y, brown_position(3, 3, v.height, v.brown).unwrap().y);
        }
        assert!(dl_position(&params, DLVertex::new(3, 0, 1)).is_err());
    }

    #[test]
    fn scene_counts() {
        let s = scene(2, 3, 3);
        assert_eq!(
            (s.count(SegmentKind::TreeP), s.count(SegmentKind::TreeQ), s.count(SegmentKind::Dl)),
            (14, 39, 114)
        );
        assert_eq!(s.segments.len(), 167);
        assert_eq!(s.segments[0].upper, pt(1.5, 0.0, 1.0));
        assert_eq!(s.segments[0].lower, pt(3.5, 0.0, 0.0));

        let s = scene(2, 2, 1);
        assert_eq!(
            (s.count(SegmentKind::TreeP), s.count(SegmentKind::TreeQ), s.count(SegmentKind::Dl)),
            (2, 2, 4)
        );
        for (p, q, l) in [(2, 2, 3), (3, 2, 2), (2, 4, 3)] {
            let s = scene(p, q, l);
            let tp: u64 = (1..=l).map(|n| p.pow(n)).sum();
            let tq: u64 = (1..=l).map(|n| q.pow(l - n + 1)).sum();
            assert_eq!(s.count(SegmentKind::TreeP) as u64, tp);
            assert_eq!(s.count(SegmentKind::TreeQ) as u64, tq);
            assert!(s.segments.iter().all(|seg| seg.upper.z.twice() - seg.lower.z.twice() == 2));
            assert!(s.of_kind(SegmentKind::TreeP).all(|seg| seg.upper.y == Half::ZERO && seg.lower.y == Half::ZERO));
            assert!(s.of_kind(SegmentKind::TreeQ).all(|seg| seg.upper.x == Half::ZERO && seg.lower.x == Half::ZERO));
        }
    }

    #[test]
    fn dl_segments_invert_to_edge_set() {
        for p in 2..=3u64 {
            for q in 2..=3u64 {
                for l in 1..=3u32 {
                    let params = DLParams::new(p, q, l).unwrap();
                    let g = DLGraph::build(params).unwrap();
                    let s = build_scene(&g, View::default());
                    let inverted: Vec<_> = s
                        .of_kind(SegmentKind::Dl)
                        .map(|seg| {
                            DLEdge::new(
                                invert_dl(&params, seg.upper).unwrap(),
                                invert_dl(&params, seg.lower).unwrap(),
                            )
                        })
                        .collect();
                    let set: BTreeSet<_> = inverted.iter().copied().collect();
                    assert_eq!(set.len(), inverted.len());
                    assert_eq!(set, g.edges().collect::<BTreeSet<_>>());
                }
            }
        }
    }

    #[test]
    fn positions_injective_per_height() {
        let params = DLParams::new(3, 2, 3).unwrap();
        let g = DLGraph::build(params).unwrap();
        let mut seen = BTreeMap::new();
        for v in g.vertices() {
            let pos = dl_position(&params, v).unwrap();
            assert!(seen.insert(pos, v).is_none());
            assert_eq!(invert_dl(&params, pos), Some(v));
        }
        assert_eq!(invert_orange(3, 3, Half::from_twice(1), Half::integer(1)), None);
        assert_eq!(invert_orange(3, 3, Half::integer(4), Half::from_twice(1)), None);
    }

    #[test]
    fn parents_are_centred_over_children() {
        for (b, l) in [(2, 4), (3, 3), (4, 2)] {
            for h in 0..l {
                for j in 0..(b as u64).pow(h) {
                    let parent = orange_position(b, l, h, j).unwrap();
                    let sum: i64 = (0..b)
                        .map(|c| orange_position(b, l, h + 1, j * b + c).unwrap().x.twice())
                        .sum();
                    assert_eq!(sum, parent.x.twice() * b as i64);
                }
                for k in 0..(b as u64).pow(l - h - 1) {
                    let parent = brown_position(b, l, h + 1, k).unwrap();
                    let sum: i64 = (0..b)
                        .map(|c| brown_position(b, l, h, k * b + c).unwrap().y.twice())
                        .sum();
                    assert_eq!(sum, parent.y.twice() * b as i64);
                }
            }
        }
    }
}
