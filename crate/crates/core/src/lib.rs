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

//! Finite truncations of the Diestel-Leader graphs `DL(p, q)`.
//!
//! A `DL(p, q)` graph is the horocyclic product of the homogeneous trees
//! `T_p` and `T_q`: its vertices are pairs `(x, y)` whose Busemann heights
//! cancel, and two pairs are adjacent when both components move along a tree
//! edge. This crate builds the slab of the graph spanning `layers + 1`
//! horocycle levels, lays it out in 3D (orange `T_p` tree in the plane
//! `y = 0`, brown `T_q` tree in the plane `x = 0`), serializes the drawing to
//! TikZ/pgfplots, JSON, Wavefront OBJ and SVG, and machine-checks the
//! structural facts the construction forces.
//!
//! ```
//! use dlgraph::{DLGraph, DLParams};
//!
//! let g = DLGraph::build(DLParams::new(2, 3, 3).unwrap()).unwrap();
//! assert_eq!(g.vertex_count(), 65);
//! assert_eq!(g.edge_count(), 114);
//! ```

pub mod cli;
pub mod dl_graph;
mod error;
pub mod exporters;
pub mod layout3d;
pub mod tree_core;
pub mod verify;

pub use dl_graph::{Census, DLGraph, DLParams, DLVertex, EditableGraph, Topology};
pub use error::{Error, Result};
pub use exporters::{ExportFormat, ExportOptions};
pub use layout3d::{build_scene, Half, Point3, Scene3D, Segment, SegmentKind, View};
pub use tree_core::{BusemannValue, LayeredTree, TreeAddress};
pub use verify::{CheckKind, CheckResult, CheckStatus, VerificationReport};
