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

//! Exact 3D layout: tree positions, DL vertex positions and the segment
//! census of the drawing.
//!
//!     cargo run --example layout_scene

use dlgraph::layout3d::{brown_position, dl_position, orange_position};
use dlgraph::{build_scene, DLGraph, DLParams, DLVertex, SegmentKind, View};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = DLParams::new(2, 3, 3)?;
    let g = DLGraph::build(params)?;

    println!("orange root: {}", orange_position(2, 3, 0, 0)?);
    println!("brown root: {}", brown_position(3, 3, 3, 0)?);
    let v = DLVertex::new(3, 5, 0);
    println!("DL vertex {v} drawn at {}", dl_position(&params, v)?);

    let scene = build_scene(&g, View::default());
    for kind in SegmentKind::ALL {
        println!("{:>7} segments: {}", kind.as_str(), scene.count(kind));
    }
    println!("  total segments: {}", scene.segments.len());
    let first = &scene.segments[0];
    println!("first segment: {} {} - {}", first.kind.as_str(), first.upper, first.lower);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
