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

//! Prints the standalone TikZ document for DL(3,2) drawn from `p = 2`,
//! `q = 3` and three layers, viewed from `{165}{10}`.
//!
//!     cargo run --example figure_dl32 > dl32.tex && pdflatex dl32.tex

use dlgraph::{build_scene, DLGraph, DLParams, ExportOptions, View};

pub fn figure() -> Result<String, Box<dyn std::error::Error>> {
    let g = DLGraph::build(DLParams::new(2, 3, 3)?)?;
    let scene = build_scene(&g, View::default());
    Ok(dlgraph::exporters::export_tikz(&scene, &ExportOptions::default()))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", figure()?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
