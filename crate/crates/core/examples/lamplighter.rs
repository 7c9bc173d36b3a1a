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

//! DL(b, b) against the lamplighter slab: encodes a few vertices as lamp
//! configurations plus a cursor and checks the bijection on edges.
//!
//!     cargo run --example lamplighter

use dlgraph::verify::check_lamplighter;
use dlgraph::verify::lamplighter::Lamplighter;
use dlgraph::{DLGraph, DLParams, DLVertex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (b, layers) = (2, 4);
    let g = DLGraph::build(DLParams::new(b, b, layers)?)?;
    let lamp = Lamplighter::new(b, layers);

    for v in [DLVertex::new(0, 0, 5), DLVertex::new(2, 3, 1), DLVertex::new(4, 9, 0)] {
        let s = lamp.encode(v).expect("vertex of the slab");
        let lamps: Vec<String> = (0..layers).map(|i| lamp.lamp(s, i).to_string()).collect();
        println!("{v} -> lamps [{}], cursor {}", lamps.join(" "), s.cursor);
        for w in g.neighbors(v)? {
            let t = lamp.encode(w).expect("vertex of the slab");
            println!("    neighbour {w} -> cursor {}, lamps {}", t.cursor, t.lamps);
        }
    }

    let result = check_lamplighter(&g);
    println!("{}: {}", result.status, result.details.as_deref().unwrap_or(""));
    assert!(result.passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
