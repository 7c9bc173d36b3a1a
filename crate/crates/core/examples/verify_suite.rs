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

//! Runs the verification suite, then shows a negative control: the same
//! checks pointed at a copy of the graph with one edge removed.
//!
//!     cargo run --example verify_suite

use dlgraph::verify::{check_degree_law, check_local_homogeneity, run_suite, SuiteOptions};
use dlgraph::{DLGraph, DLParams, DLVertex, EditableGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = DLGraph::build(DLParams::new(2, 2, 4)?)?;
    let report = run_suite(&g, &SuiteOptions::default())?;
    print!("{report}");
    assert!(report.all_passed());

    let mut broken = EditableGraph::from_topology(&g);
    broken.remove_edge(DLVertex::new(2, 1, 1), DLVertex::new(1, 0, 2));
    for result in [check_degree_law(&broken), check_local_homogeneity(&broken, 2)?] {
        println!(
            "mutated graph, {}: {} ({})",
            result.name,
            result.status,
            result.counterexample.as_deref().unwrap_or("-")
        );
        assert!(result.failed());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
