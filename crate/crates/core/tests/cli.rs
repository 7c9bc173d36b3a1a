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

//! End-to-end tests of the `dlgraph` binary.

use std::process::{Command, Output};

fn dlgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlgraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_reports_counts() {
    let o = dlgraph(&["stats", "-p", "2", "-q", "3", "-L", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("65"), "{text}");
    assert!(text.contains("114"), "{text}");
}

#[test]
fn stats_json_is_parseable() {
    let o = dlgraph(&["stats", "-p", "2", "-q", "3", "-L", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"], 65);
    assert_eq!(v["edges"], 114);
}

#[test]
fn verify_lamplighter_parameters_pass() {
    let o = dlgraph(&["verify", "-p", "2", "-q", "2", "-L", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[pass] lamplighter"), "{text}");
    assert!(!text.contains("[fail]"), "{text}");
}

#[test]
fn export_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dl.tex");
    let o = dlgraph(&["export", "--format", "tikz", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let tex = std::fs::read_to_string(&path).unwrap();
    assert_eq!(tex.matches("\\addplot3").count(), 167);
}

#[test]
fn figure_matches_golden_file() {
    let o = dlgraph(&["figure", "--name", "dl32"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/dl32.tex"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for format in ["tikz", "json", "obj", "svg"] {
        let a = dlgraph(&["export", "--format", format]);
        let b = dlgraph(&["export", "--format", format]);
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(dlgraph(&["stats", "-p", "1"]).status.code(), Some(2));
    assert_eq!(dlgraph(&["bogus"]).status.code(), Some(2));
    assert_eq!(dlgraph(&["stats", "-p", "4", "-q", "4", "-L", "12"]).status.code(), Some(3));
    let o = dlgraph(&["export", "-o", "/nonexistent-dir/x.tex"]);
    assert_eq!(o.status.code(), Some(1));
}
