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

//! Executable checks of the structure the horocyclic-product construction
//! forces on the slab.
//!
//! Every check works on a [`Topology`], so each one can also be pointed at
//! a deliberately corrupted [`EditableGraph`](crate::EditableGraph) copy;
//! a failing check always names a concrete vertex, edge or segment.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::dl_graph::{bfs_distances, census, DLEdge, DLGraph, DLParams, DLVertex, Topology};
use crate::error::{Error, Result};
use crate::layout3d::{build_scene, invert_dl, Half, Scene3D, SegmentKind, View};
use crate::tree_core::{LayeredTree, TreeAddress};

pub mod iso;
pub mod lamplighter;

use lamplighter::Lamplighter;

/// Largest ball radius [`check_local_homogeneity`] accepts.
pub const MAX_BALL_RADIUS: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "not applicable")]
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not applicable",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Connectivity,
    Counts,
    DegreeLaw,
    Duality,
    Lamplighter,
    LevelCondition,
    LocalHomogeneity,
    SceneGraphAgreement,
}

impl CheckKind {
    /// Alphabetical by name.
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Connectivity,
        CheckKind::Counts,
        CheckKind::DegreeLaw,
        CheckKind::Duality,
        CheckKind::Lamplighter,
        CheckKind::LevelCondition,
        CheckKind::LocalHomogeneity,
        CheckKind::SceneGraphAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Connectivity => "connectivity",
            CheckKind::Counts => "counts",
            CheckKind::DegreeLaw => "degree_law",
            CheckKind::Duality => "duality",
            CheckKind::Lamplighter => "lamplighter",
            CheckKind::LevelCondition => "level_condition",
            CheckKind::LocalHomogeneity => "local_homogeneity",
            CheckKind::SceneGraphAgreement => "scene_graph_agreement",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let wanted = s.trim().replace('-', "_");
        CheckKind::ALL
            .into_iter()
            .find(|k| k.as_str() == wanted)
            .ok_or_else(|| {
                let names: Vec<_> = CheckKind::ALL.iter().map(|k| k.as_str()).collect();
                format!("unknown check `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: CheckKind,
    pub parameters: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
    /// Wall-clock time; never serialized so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Outcome of a check body before it is stamped with name and timing.
enum Outcome {
    Pass(String),
    Fail(String),
    NotApplicable(String),
}

fn timed(name: CheckKind, parameters: String, body: impl FnOnce() -> Outcome) -> CheckResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (status, counterexample, details) = match outcome {
        Outcome::Pass(d) => (CheckStatus::Pass, None, Some(d)),
        Outcome::Fail(c) => (CheckStatus::Fail, Some(c), None),
        Outcome::NotApplicable(d) => (CheckStatus::NotApplicable, None, Some(d)),
    };
    CheckResult {
        name,
        parameters,
        status,
        counterexample,
        details,
        elapsed,
    }
}

fn histogram_text(h: &BTreeMap<usize, u64>) -> String {
    let parts: Vec<_> = h.iter().map(|(d, n)| format!("{d}:{n}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Every vertex at height `h` has degree `(h > 0 ? q : 0) + (h < L ? p : 0)`.
pub fn check_degree_law<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::DegreeLaw, params.to_string(), || {
        let mut hist = BTreeMap::new();
        for v in g.vertices() {
            let degree = g.adjacent(v).len();
            if v.height > params.layers() {
                return Outcome::Fail(format!("vertex {v} lies above the top height"));
            }
            let expected = params.expected_degree(v.height);
            if degree != expected {
                return Outcome::Fail(format!("vertex {v} has degree {degree}, expected {expected}"));
            }
            *hist.entry(degree).or_insert(0u64) += 1;
        }
        Outcome::Pass(format!("degree histogram {}", histogram_text(&hist)))
    })
}

/// Enumerated vertex, edge and per-height counts against the closed forms,
/// plus the handshake identity.
pub fn check_counts<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::Counts, params.to_string(), || {
        let c = census(g);
        let expected_v = params.expected_vertex_count();
        let expected_e = params.expected_edge_count();
        if Some(c.vertices) != expected_v {
            return Outcome::Fail(format!(
                "enumerated |V| = {}, closed form gives {:?}",
                c.vertices, expected_v
            ));
        }
        if Some(c.edges) != expected_e {
            return Outcome::Fail(format!(
                "enumerated |E| = {}, closed form gives {:?}",
                c.edges, expected_e
            ));
        }
        for (h, &n) in c.heights.iter().enumerate() {
            let want = params.height_count(h as u32);
            if Some(n) != want {
                return Outcome::Fail(format!("height {h} holds {n} vertices, expected {want:?}"));
            }
        }
        if c.degree_sum != 2 * c.edges {
            return Outcome::Fail(format!(
                "degree sum {} differs from 2|E| = {}",
                c.degree_sum,
                2 * c.edges
            ));
        }
        Outcome::Pass(format!("|V| = {}, |E| = {}, degree sum = {}", c.vertices, c.edges, c.degree_sum))
    })
}

pub fn check_connectivity<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::Connectivity, params.to_string(), || {
        let vertices = g.vertices();
        let Some(&start) = vertices.first() else {
            return Outcome::Fail("graph has no vertices".into());
        };
        let reached = bfs_distances(g, start);
        match vertices.iter().find(|v| !reached.contains_key(v)) {
            Some(v) => Outcome::Fail(format!("vertex {v} is unreachable from {start}")),
            None => {
                let ecc = reached.values().max().copied().unwrap_or(0);
                Outcome::Pass(format!(
                    "all {} vertices reachable from {start} (eccentricity {ecc})",
                    vertices.len()
                ))
            }
        }
    })
}

/// Busemann heights of the two components cancel at every vertex, for the
/// orange root as basepoint of `T_p` and every bottom-level basepoint of
/// `T_q`; along every edge both components move along a tree edge.
pub fn check_level_condition<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::LevelCondition, params.to_string(), || {
        let layers = params.layers();
        let (Ok(tp), Ok(tq)) = (
            LayeredTree::with_level_cap(params.p(), layers, u64::MAX),
            LayeredTree::with_level_cap(params.q(), layers, u64::MAX),
        ) else {
            return Outcome::Fail(format!("trees for {params} cannot be built"));
        };
        let orange_of = |v: DLVertex| Some(v.orange_address()).filter(|a| tp.contains(*a));
        let brown_of = |v: DLVertex| {
            (v.height <= layers)
                .then(|| v.brown_address(layers))
                .filter(|a| tq.contains(*a))
        };
        let basepoints: Vec<_> = (0..tq.level_size(layers))
            .map(|k| TreeAddress::new(layers, k))
            .collect();
        let vertices = g.vertices();
        for &v in &vertices {
            let (Some(u), Some(w)) = (orange_of(v), brown_of(v)) else {
                return Outcome::Fail(format!("vertex {v} has a component outside its tree"));
            };
            let hp = tp.busemann(u, TreeAddress::ROOT).expect("valid").value();
            for &o in &basepoints {
                let hq = tq.busemann(w, o).expect("valid").value();
                if hp != -hq {
                    return Outcome::Fail(format!(
                        "vertex {v}: orange height {hp}, brown height {hq} from basepoint {o}"
                    ));
                }
            }
        }
        let edges = g.edge_list();
        for e in &edges {
            let (a, b) = (e.upper, e.lower);
            let moves = match (orange_of(a), orange_of(b), brown_of(a), brown_of(b)) {
                (Some(ua), Some(ub), Some(wa), Some(wb)) => (
                    tp.distance(ua, ub).expect("valid"),
                    tq.distance(wa, wb).expect("valid"),
                ),
                _ => return Outcome::Fail(format!("edge {e} has an endpoint outside the trees")),
            };
            if moves != (1, 1) {
                return Outcome::Fail(format!(
                    "edge {e} moves {} step(s) in T_p and {} in T_q, expected one each",
                    moves.0, moves.1
                ));
            }
        }
        Outcome::Pass(format!(
            "{} vertices x {} brown basepoints, {} edges",
            vertices.len(),
            basepoints.len(),
            edges.len()
        ))
    })
}

/// Interior radius-`r` balls (`r ≤ h ≤ L − r`) are all isomorphic, centre
/// to centre, to the ball of the first interior vertex.
pub fn check_local_homogeneity<G: Topology + ?Sized>(g: &G, radius: u32) -> Result<CheckResult> {
    let params = g.params();
    if radius == 0 || radius > MAX_BALL_RADIUS {
        return Err(Error::InvalidRadius {
            radius,
            max: MAX_BALL_RADIUS,
        });
    }
    if params.layers() < 2 * radius {
        return Err(Error::RadiusTooLarge {
            radius,
            layers: params.layers(),
        });
    }
    let layers = params.layers();
    Ok(timed(CheckKind::LocalHomogeneity, format!("{params},r={radius}"), || {
        let interior: Vec<_> = g
            .vertices()
            .into_iter()
            .filter(|v| v.height >= radius && v.height <= layers - radius)
            .collect();
        let reference = iso::induced_ball(g, interior[0], radius);
        for &v in &interior[1..] {
            let ball = iso::induced_ball(g, v, radius);
            if !iso::are_isomorphic(&reference, &ball) {
                return Outcome::Fail(format!(
                    "ball around {v} ({} vertices, {} edges) is not isomorphic to the ball around {} ({} vertices, {} edges)",
                    ball.len(),
                    ball.edge_count(),
                    interior[0],
                    reference.len(),
                    reference.edge_count()
                ));
            }
        }
        Outcome::Pass(format!(
            "{} interior balls of {} vertices and {} edges",
            interior.len(),
            reference.len(),
            reference.edge_count()
        ))
    }))
}

/// For `p = q = b`, the digit encoding maps the slab bijectively onto the
/// lamplighter slab and carries edges exactly onto edges.
pub fn check_lamplighter<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::Lamplighter, params.to_string(), || {
        let Some(lamp) = Lamplighter::for_params(&params) else {
            return Outcome::NotApplicable(format!(
                "requires p = q, got p = {}, q = {}",
                params.p(),
                params.q()
            ));
        };
        let mut image = HashMap::new();
        for v in g.vertices() {
            let Some(s) = lamp.encode(v) else {
                return Outcome::Fail(format!("vertex {v} has no digit encoding"));
            };
            if let Some(prev) = image.insert(s, v) {
                return Outcome::Fail(format!("vertices {prev} and {v} both map to {s}"));
            }
        }
        let states = lamp.states().count();
        if image.len() != states {
            let missing = lamp.states().find(|s| !image.contains_key(s)).expect("fewer images");
            return Outcome::Fail(format!("lamplighter state {missing} has no preimage"));
        }
        let target = lamp.edges();
        let mut mapped = BTreeSet::new();
        for e in g.edge_list() {
            let (a, b) = (lamp.encode(e.upper).unwrap(), lamp.encode(e.lower).unwrap());
            let pair = if a.cursor <= b.cursor { (a, b) } else { (b, a) };
            if !target.contains(&pair) {
                return Outcome::Fail(format!("edge {e} maps to non-edge {} - {}", pair.0, pair.1));
            }
            mapped.insert(pair);
        }
        if let Some(&(s, t)) = target.iter().find(|p| !mapped.contains(p)) {
            return Outcome::Fail(format!(
                "lamplighter edge {s} - {t} is not hit (from {} - {})",
                lamp.decode(s),
                lamp.decode(t)
            ));
        }
        Outcome::Pass(format!(
            "isomorphism onto the lamplighter slab: {states} states, {} edges",
            target.len()
        ))
    })
}

/// `(h, j, k) ↦ (L − h, k, j)` carries the edge set onto that of
/// `DL(q, p)` with the same number of layers.
pub fn check_duality<G: Topology + ?Sized>(g: &G) -> CheckResult {
    let params = g.params();
    timed(CheckKind::Duality, params.to_string(), || {
        let layers = params.layers();
        let dual = match DLGraph::build_with_cap(params.dual(), u64::MAX) {
            Ok(d) => d,
            Err(e) => return Outcome::Fail(format!("dual graph cannot be built: {e}")),
        };
        let vertices = g.vertices();
        if vertices.len() != dual.vertex_count() {
            return Outcome::Fail(format!(
                "{} vertices, dual has {}",
                vertices.len(),
                dual.vertex_count()
            ));
        }
        if let Some(v) = vertices
            .iter()
            .find(|v| v.height > layers || !dual.contains(v.dual(layers)))
        {
            return Outcome::Fail(format!("vertex {v} has no image in DL({},{})", params.q(), params.p()));
        }
        let mut mapped = BTreeSet::new();
        for e in g.edge_list() {
            let (a, b) = (e.upper.dual(layers), e.lower.dual(layers));
            if !dual.is_edge(a, b).unwrap_or(false) {
                return Outcome::Fail(format!("edge {e} maps to non-edge {a}-{b}"));
            }
            mapped.insert(DLEdge::new(a, b));
        }
        if let Some(e) = dual.edges().find(|e| !mapped.contains(e)) {
            return Outcome::Fail(format!("dual edge {e} is not hit"));
        }
        Outcome::Pass(format!("{} edges preserved", mapped.len()))
    })
}

/// Inverts the coordinates of every DL segment and compares the recovered
/// vertex pairs with the edge set of `g`.
pub fn check_scene_graph_agreement<G: Topology + ?Sized>(g: &G, scene: &Scene3D) -> CheckResult {
    let params = g.params();
    timed(CheckKind::SceneGraphAgreement, params.to_string(), || {
        if scene.params != params {
            return Outcome::Fail(format!("scene drawn for {}, graph is {params}", scene.params));
        }
        for seg in scene.of_kind(SegmentKind::TreeP) {
            if seg.upper.y != Half::ZERO || seg.lower.y != Half::ZERO {
                return Outcome::Fail(format!("tree_p segment {}-{} leaves y = 0", seg.upper, seg.lower));
            }
        }
        for seg in scene.of_kind(SegmentKind::TreeQ) {
            if seg.upper.x != Half::ZERO || seg.lower.x != Half::ZERO {
                return Outcome::Fail(format!("tree_q segment {}-{} leaves x = 0", seg.upper, seg.lower));
            }
        }
        let mut drawn = BTreeSet::new();
        for seg in scene.of_kind(SegmentKind::Dl) {
            let (Some(a), Some(b)) = (invert_dl(&params, seg.upper), invert_dl(&params, seg.lower))
            else {
                return Outcome::Fail(format!(
                    "segment {}-{} does not join two drawn vertices",
                    seg.upper, seg.lower
                ));
            };
            let e = DLEdge::new(a, b);
            if !drawn.insert(e) {
                return Outcome::Fail(format!("edge {e} is drawn twice"));
            }
        }
        let edges: BTreeSet<_> = g.edge_list().into_iter().collect();
        if let Some(e) = drawn.difference(&edges).next() {
            return Outcome::Fail(format!("drawn segment {e} is not an edge of the graph"));
        }
        if let Some(e) = edges.difference(&drawn).next() {
            return Outcome::Fail(format!("edge {e} is not drawn"));
        }
        Outcome::Pass(format!("{} segments match {} edges", drawn.len(), edges.len()))
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Checks to run; all of them when `None`.
    pub checks: Option<Vec<CheckKind>>,
    /// Ball radius for local homogeneity. When unset the largest `r ≤ 2`
    /// with `2r ≤ L` is used.
    pub radius: Option<u32>,
}

/// Default radius for a slab with `layers` layers, if any fits.
pub fn default_radius(layers: u32) -> Option<u32> {
    Some((layers / 2).min(2)).filter(|&r| r > 0)
}

/// Runs the selected checks concurrently and reports them ordered by
/// name, then parameters.
pub fn run_suite(g: &DLGraph, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut kinds: Vec<CheckKind> = opts.checks.clone().unwrap_or_else(|| CheckKind::ALL.to_vec());
    kinds.sort();
    kinds.dedup();
    let layers = g.layers();
    if let (Some(r), true) = (opts.radius, kinds.contains(&CheckKind::LocalHomogeneity)) {
        // surface bad radii as errors before spawning anything
        if r == 0 || r > MAX_BALL_RADIUS {
            return Err(Error::InvalidRadius { radius: r, max: MAX_BALL_RADIUS });
        }
        if layers < 2 * r {
            return Err(Error::RadiusTooLarge { radius: r, layers });
        }
    }
    let scene = build_scene(g, View::default());
    let run = |kind: CheckKind| -> CheckResult {
        match kind {
            CheckKind::Connectivity => check_connectivity(g),
            CheckKind::Counts => check_counts(g),
            CheckKind::DegreeLaw => check_degree_law(g),
            CheckKind::Duality => check_duality(g),
            CheckKind::Lamplighter => check_lamplighter(g),
            CheckKind::LevelCondition => check_level_condition(g),
            CheckKind::LocalHomogeneity => match opts.radius.or_else(|| default_radius(layers)) {
                Some(r) => check_local_homogeneity(g, r).expect("radius validated above"),
                None => timed(kind, g.params().to_string(), || {
                    Outcome::NotApplicable(format!("no ball radius r >= 1 fits in {layers} layer(s)"))
                }),
            },
            CheckKind::SceneGraphAgreement => check_scene_graph_agreement(g, &scene),
        }
    };
    let mut checks: Vec<CheckResult> = std::thread::scope(|s| {
        let handles: Vec<_> = kinds.iter().map(|&k| s.spawn(move || run(k))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    checks.sort_by(|a, b| (a.name, &a.parameters).cmp(&(b.name, &b.parameters)));
    Ok(VerificationReport {
        params: g.params(),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub params: DLParams,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// No check failed; not-applicable checks count as fine.
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(CheckResult::failed)
    }

    pub fn get(&self, kind: CheckKind) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == kind)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, then `elapsed` timings in a separate block meant
    /// for stderr.
    pub fn timings(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{}: {:.3} ms\n", c.name, c.elapsed.as_secs_f64() * 1e3))
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification of DL graph {}", self.params)?;
        for c in &self.checks {
            write!(f, "[{}] {} ({})", c.status, c.name, c.parameters)?;
            if let Some(d) = &c.details {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
            if let Some(cx) = &c.counterexample {
                writeln!(f, "    counterexample: {cx}")?;
            }
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        writeln!(
            f,
            "{} checks: {} passed, {} failed, {} not applicable",
            self.checks.len(),
            count(CheckStatus::Pass),
            count(CheckStatus::Fail),
            count(CheckStatus::NotApplicable)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dl_graph::EditableGraph;

    fn graph(p: u64, q: u64, l: u32) -> DLGraph {
        DLGraph::build(DLParams::new(p, q, l).unwrap()).unwrap()
    }

    fn v(h: u32, j: u64, k: u64) -> DLVertex {
        DLVertex::new(h, j, k)
    }

    #[test]
    fn degree_law_examples() {
        let r = check_degree_law(&graph(2, 3, 3));
        assert!(r.passed());
        assert_eq!(r.details.as_deref(), Some("degree histogram {2:27, 3:8, 5:30}"));
        let r = check_degree_law(&graph(2, 2, 1));
        assert_eq!(r.details.as_deref(), Some("degree histogram {2:4}"));

        let mut e = EditableGraph::from_topology(&graph(2, 3, 3));
        e.remove_edge(v(1, 0, 0), v(0, 0, 2));
        let r = check_degree_law(&e);
        assert!(r.failed());
        assert!(r.counterexample.unwrap().contains("(0,0,2)"));
    }

    #[test]
    fn counts_examples() {
        let r = check_counts(&graph(2, 3, 3));
        assert_eq!(r.details.as_deref(), Some("|V| = 65, |E| = 114, degree sum = 228"));
        let r = check_counts(&graph(2, 2, 1));
        assert_eq!(r.details.as_deref(), Some("|V| = 4, |E| = 4, degree sum = 8"));
        let mut e = EditableGraph::from_topology(&graph(2, 2, 2));
        e.add_edge(v(2, 0, 0), v(0, 0, 3));
        assert!(check_counts(&e).failed());
    }

    #[test]
    fn connectivity_examples() {
        assert!(check_connectivity(&graph(3, 2, 3)).passed());
        let mut e = EditableGraph::from_topology(&graph(2, 2, 2));
        e.add_edge(v(5, 0, 0), v(6, 0, 0));
        let r = check_connectivity(&e);
        assert!(r.failed());
        assert!(r.counterexample.unwrap().contains("(5,0,0)"));
    }

    #[test]
    fn level_condition_examples() {
        let r = check_level_condition(&graph(2, 3, 3));
        assert!(r.passed());
        assert_eq!(r.details.as_deref(), Some("65 vertices x 27 brown basepoints, 114 edges"));
        for (p, q) in [(2, 2), (3, 2), (4, 3)] {
            assert!(check_level_condition(&graph(p, q, 1)).passed());
        }
        // a same-height chord keeps the vertex set intact but breaks the edge rule
        let mut e = EditableGraph::from_topology(&graph(2, 3, 2));
        e.add_edge(v(1, 0, 0), v(1, 1, 0));
        assert!(check_level_condition(&e).failed());
        // an orange component one level off
        let mut e = EditableGraph::from_topology(&graph(2, 3, 2));
        e.add_edge(v(1, 0, 0), v(0, 1, 0));
        assert!(check_level_condition(&e).failed());
    }

    #[test]
    fn local_homogeneity_examples() {
        let r = check_local_homogeneity(&graph(2, 3, 6), 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = check_local_homogeneity(&graph(2, 3, 2), 1).unwrap();
        assert!(r.passed());
        assert!(r.details.unwrap().contains("balls of 6 vertices"));
        assert_eq!(
            check_local_homogeneity(&graph(2, 3, 3), 2).unwrap_err(),
            Error::RadiusTooLarge { radius: 2, layers: 3 }
        );
        assert!(check_local_homogeneity(&graph(2, 3, 8), 4).is_err());
        assert!(check_local_homogeneity(&graph(2, 3, 8), 0).is_err());

        let mut e = EditableGraph::from_topology(&graph(2, 2, 4));
        e.remove_edge(v(2, 1, 1), v(1, 0, 2));
        assert!(check_local_homogeneity(&e, 2).unwrap().failed());
    }

    #[test]
    fn lamplighter_examples() {
        let r = check_lamplighter(&graph(2, 2, 4));
        assert!(r.passed());
        assert!(r.details.unwrap().contains("80 states"));
        assert!(check_lamplighter(&graph(2, 2, 1)).passed());
        assert_eq!(check_lamplighter(&graph(2, 3, 2)).status, CheckStatus::NotApplicable);

        let mut e = EditableGraph::from_topology(&graph(2, 2, 3));
        e.remove_edge(v(1, 1, 0), v(0, 0, 1));
        assert!(check_lamplighter(&e).failed());
        let mut e = EditableGraph::from_topology(&graph(2, 2, 3));
        e.add_edge(v(3, 0, 0), v(0, 0, 7));
        assert!(check_lamplighter(&e).failed());
    }

    #[test]
    fn duality_examples() {
        assert!(check_duality(&graph(2, 3, 3)).passed());
        let mut e = EditableGraph::from_topology(&graph(2, 3, 2));
        e.remove_edge(v(1, 0, 0), v(0, 0, 2));
        assert!(check_duality(&e).failed());
    }

    #[test]
    fn scene_agreement_examples() {
        let g = graph(2, 3, 3);
        let mut scene = build_scene(&g, View::default());
        let r = check_scene_graph_agreement(&g, &scene);
        assert_eq!(r.details.as_deref(), Some("114 segments match 114 edges"));

        let i = scene.segments.iter().position(|s| s.kind == SegmentKind::Dl).unwrap();
        scene.segments[i].lower.x = Half::from_twice(scene.segments[i].lower.x.twice() + 1);
        assert!(check_scene_graph_agreement(&g, &scene).failed());

        let mut e = EditableGraph::from_topology(&g);
        e.remove_edge(v(1, 0, 0), v(0, 0, 2));
        assert!(check_scene_graph_agreement(&e, &build_scene(&g, View::default())).failed());
    }

    #[test]
    fn suite_is_sorted_and_deterministic() {
        let g = graph(2, 2, 4);
        let report = run_suite(&g, &SuiteOptions::default()).unwrap();
        let names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CheckKind::ALL.to_vec());
        assert!(report.all_passed());
        assert_eq!(report.get(CheckKind::Lamplighter).unwrap().status, CheckStatus::Pass);
        let again = run_suite(&g, &SuiteOptions::default()).unwrap();
        assert_eq!(report.to_json(), again.to_json());
        assert_eq!(report.to_string(), again.to_string());
        assert!(!report.to_json().contains("elapsed"));
    }

    #[test]
    fn suite_selection_and_radius() {
        let g = graph(2, 3, 1);
        let opts = SuiteOptions {
            checks: Some(vec![CheckKind::LocalHomogeneity, CheckKind::Counts, CheckKind::Counts]),
            radius: None,
        };
        let report = run_suite(&g, &opts).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert_eq!(report.checks[1].status, CheckStatus::NotApplicable);
        let bad = SuiteOptions { checks: None, radius: Some(1) };
        assert!(run_suite(&graph(2, 3, 1), &bad).is_err());
        assert_eq!(default_radius(3), Some(1));
        assert_eq!(default_radius(7), Some(2));
        assert_eq!(default_radius(1), None);
    }

    #[test]
    fn check_names_parse() {
        for k in CheckKind::ALL {
            assert_eq!(k.as_str().parse::<CheckKind>(), Ok(k));
        }
        assert_eq!("degree-law".parse::<CheckKind>(), Ok(CheckKind::DegreeLaw));
        assert!("nope".parse::<CheckKind>().is_err());
    }
}
