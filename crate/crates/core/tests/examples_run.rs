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

//! Runs every example's entry point so the examples stay working.

#[allow(dead_code)]
#[path = "../examples/tree_busemann.rs"]
mod tree_busemann;

#[allow(dead_code)]
#[path = "../examples/build_graph.rs"]
mod build_graph;

#[allow(dead_code)]
#[path = "../examples/layout_scene.rs"]
mod layout_scene;

#[allow(dead_code)]
#[path = "../examples/export_formats.rs"]
mod export_formats;

#[allow(dead_code)]
#[path = "../examples/verify_suite.rs"]
mod verify_suite;

#[allow(dead_code)]
#[path = "../examples/lamplighter.rs"]
mod lamplighter;

#[allow(dead_code)]
#[path = "../examples/figure_dl32.rs"]
mod figure_dl32;

#[test]
fn tree_busemann_runs() {
    tree_busemann::run_example().unwrap();
}

#[test]
fn build_graph_runs() {
    build_graph::run_example().unwrap();
    build_graph::run_example_with(3, 2, 2).unwrap();
}

#[test]
fn layout_scene_runs() {
    layout_scene::run_example().unwrap();
}

#[test]
fn export_formats_writes_every_format() {
    let dir = tempfile::tempdir().unwrap();
    let paths = export_formats::run_example_in(dir.path()).unwrap();
    assert_eq!(paths.len(), 4);
    for path in paths {
        assert!(std::fs::metadata(&path).unwrap().len() > 0, "{}", path.display());
    }
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().unwrap();
}

#[test]
fn lamplighter_runs() {
    lamplighter::run_example().unwrap();
}

#[test]
fn figure_dl32_matches_golden_file() {
    figure_dl32::run_example().unwrap();
    assert_eq!(figure_dl32::figure().unwrap(), include_str!("golden/dl32.tex"));
}
