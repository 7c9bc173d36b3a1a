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

//! Horocycle structure of a truncated homogeneous tree: predecessors,
//! confluents, distances, Busemann values and horocycles.
//!
//!     cargo run --example tree_busemann

use dlgraph::{LayeredTree, TreeAddress};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tree = LayeredTree::new(2, 3)?;
    let x = TreeAddress::new(3, 2);
    let o = TreeAddress::new(2, 0);

    let c = tree.confluent(x, o)?;
    println!("T_2 truncated to {} layers, {} vertices", tree.layers(), tree.vertex_count());
    println!("x = {x}, o = {o}, confluent x^o = {c}");
    println!("d(x, c) = {}, d(o, c) = {}", tree.distance(x, c)?, tree.distance(o, c)?);
    let h = tree.busemann(x, o)?;
    println!("busemann h(x) relative to o = {}", h.value());
    assert_eq!(h.value(), 1);

    if let Some(parent) = tree.predecessor(x)? {
        println!("predecessor of {x}: {parent}");
    }
    let succ: Vec<String> = tree.successors(o)?.iter().map(|a| a.to_string()).collect();
    println!("successors of {o}: {}", succ.join(" "));

    for k in -2..=1 {
        let ring: Vec<String> = tree.horocycle(o, k)?.iter().map(|a| a.to_string()).collect();
        println!("H_{k} relative to {o}: [{}]", ring.join(", "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
