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

//! Builds the slab of DL(p, q) and inspects it: census, neighbourhoods,
//! edge tests, BFS distances and the duality with DL(q, p).
//!
//!     cargo run --example build_graph -- 2 3 3

use std::collections::BTreeSet;

use dlgraph::dl_graph::DLEdge;
use dlgraph::{DLGraph, DLParams, DLVertex};

pub fn run_example_with(p: u64, q: u64, layers: u32) -> Result<(), Box<dyn std::error::Error>> {
    let g = DLGraph::build(DLParams::new(p, q, layers)?)?;
    print!("{}", g.census());

    let v = DLVertex::new(1, 0, 0);
    let ns: Vec<String> = g.neighbors(v)?.iter().map(|w| w.to_string()).collect();
    println!("neighbours of {v}: {}", ns.join(" "));

    let lowest = DLVertex::new(0, 0, 0);
    let top = g.vertices().last().expect("non-empty");
    println!("bfs distance {lowest} -> {top}: {}", g.bfs_distance(lowest, top)?);

    let dual = DLGraph::build(g.params().dual())?;
    let mapped: BTreeSet<DLEdge> = g
        .edges()
        .map(|e| DLEdge::new(e.upper.dual(layers), e.lower.dual(layers)))
        .collect();
    let same = mapped == dual.edges().collect::<BTreeSet<_>>();
    println!("(h,j,k) -> (L-h,k,j) maps the edges onto DL({q},{p}): {same}");
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_example_with(2, 3, 3)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    match args[..] {
        [] => run_example(),
        [p, q, l] => run_example_with(p, q, l as u32),
        _ => Err("usage: build_graph [P Q LAYERS]".into()),
    }
}
