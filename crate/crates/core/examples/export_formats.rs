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

//! Writes the drawing of DL(2,3) in every supported format.
//!
//!     cargo run --example export_formats -- /tmp/dl-out
//!
//! Without an argument the files go to a `dlgraph-examples` directory under
//! the system temporary directory.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use dlgraph::exporters::write_scene;
use dlgraph::{build_scene, DLGraph, DLParams, ExportFormat, ExportOptions, View};

pub fn run_example_in(dir: &Path) -> Result<Vec<PathBuf>, Box<dyn std::error::Error>> {
    fs::create_dir_all(dir)?;
    let g = DLGraph::build(DLParams::new(2, 3, 3)?)?;
    let scene = build_scene(&g, View::default());
    let mut written = Vec::new();
    for format in ExportFormat::ALL {
        let ext = match format {
            ExportFormat::Tikz => "tex",
            other => other.as_str(),
        };
        let path = dir.join(format!("dl_2_3_3.{ext}"));
        let mut out = BufWriter::new(File::create(&path)?);
        write_scene(&scene, &ExportOptions::with_format(format), &mut out)?;
        drop(out);
        println!("{format:>4}: {} ({} bytes)", path.display(), fs::metadata(&path)?.len());
        written.push(path);
    }
    Ok(written)
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_example_in(&std::env::temp_dir().join("dlgraph-examples")).map(|_| ())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args_os().nth(1) {
        Some(dir) => run_example_in(Path::new(&dir)).map(|_| ()),
        None => run_example(),
    }
}
