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

//! JSON document describing the graph, both trees and their positions.
//!
//! Vertex ids follow the deterministic `(height, orange, brown)` order of
//! [`DLGraph`]; tree node ids follow `(height, index)` order.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::ExportOptions;
use crate::dl_graph::{DLGraph, DLParams};
use crate::layout3d::{brown_position, dl_position, orange_position, Scene3D};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonParams {
    pub p: u64,
    pub q: u64,
    pub layers: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub h: u32,
    pub orange: u64,
    pub brown: u64,
    pub pos: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub a: usize,
    pub b: usize,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTreeNode {
    pub id: usize,
    pub h: u32,
    pub index: u64,
    pub pos: [f64; 3],
}

/// Tree edges join node `a` at height `h` to node `b` at height `h − 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTreeEdge {
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTree {
    pub branching: u64,
    pub nodes: Vec<JsonTreeNode>,
    pub edges: Vec<JsonTreeEdge>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonScene {
    pub params: JsonParams,
    pub view: [f64; 2],
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<JsonEdge>,
    pub tree_p: JsonTree,
    pub tree_q: JsonTree,
}

impl JsonScene {
    pub fn from_scene(scene: &Scene3D, opts: &ExportOptions) -> Self {
        let params = scene.params;
        let g = DLGraph::build_with_cap(params, u64::MAX).expect("scene parameters are valid");
        let view = opts.view_for(scene);
        let vertices = g
            .vertices()
            .enumerate()
            .map(|(id, v)| JsonVertex {
                id,
                h: v.height,
                orange: v.orange,
                brown: v.brown,
                pos: dl_position(&params, v).expect("vertex of the graph").to_array(),
            })
            .collect();
        let edges = g
            .edges()
            .map(|e| JsonEdge {
                a: g.index_of(e.upper).expect("vertex of the graph"),
                b: g.index_of(e.lower).expect("vertex of the graph"),
                kind: "dl".to_string(),
            })
            .collect();
        JsonScene {
            params: JsonParams {
                p: params.p(),
                q: params.q(),
                layers: params.layers(),
            },
            view: [view.azimuth, view.elevation],
            vertices,
            edges,
            tree_p: orange_tree(&params),
            tree_q: brown_tree(&params),
        }
    }
}

fn orange_tree(params: &DLParams) -> JsonTree {
    let (p, l) = (params.p(), params.layers());
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut level_start = 0;
    for h in 0..=l {
        let width = p.pow(h);
        let prev_start = level_start - if h > 0 { p.pow(h - 1) as usize } else { 0 };
        for j in 0..width {
            let id = nodes.len();
            let pos = orange_position(p, l, h, j).expect("in range").to_array();
            nodes.push(JsonTreeNode { id, h, index: j, pos });
            if h > 0 {
                edges.push(JsonTreeEdge {
                    a: id,
                    b: prev_start + (j / p) as usize,
                });
            }
        }
        level_start += width as usize;
    }
    JsonTree {
        branching: p,
        nodes,
        edges,
    }
}

fn brown_tree(params: &DLParams) -> JsonTree {
    let (q, l) = (params.q(), params.layers());
    let mut nodes = Vec::new();
    let mut starts = Vec::new();
    for h in 0..=l {
        starts.push(nodes.len());
        for k in 0..q.pow(l - h) {
            let id = nodes.len();
            let pos = brown_position(q, l, h, k).expect("in range").to_array();
            nodes.push(JsonTreeNode { id, h, index: k, pos });
        }
    }
    let mut edges = Vec::new();
    for h in 1..=l {
        for k in 0..q.pow(l - h) {
            for c in 0..q {
                edges.push(JsonTreeEdge {
                    a: starts[h as usize] + k as usize,
                    b: starts[h as usize - 1] + (k * q + c) as usize,
                });
            }
        }
    }
    JsonTree {
        branching: q,
        nodes,
        edges,
    }
}

pub fn write_json<W: Write + ?Sized>(scene: &Scene3D, opts: &ExportOptions, out: &mut W) -> io::Result<()> {
    let doc = JsonScene::from_scene(scene, opts);
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    out.write_all(b"\n")
}

pub fn export_json(scene: &Scene3D, opts: &ExportOptions) -> String {
    let mut buf = Vec::new();
    write_json(scene, opts, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("UTF-8 output")
}
