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

//! The `dlgraph` command line.
//!
//! `-p` is the arity of the tree drawn in the plane `y = 0` and `-q` the
//! arity of the tree in the plane `x = 0`, matching the `\p`/`\q` variables
//! of the original TikZ listing. Exit status: 0 on success, 1 when a
//! verification check fails or output cannot be written, 2 on usage
//! errors, 3 when the requested graph exceeds the vertex cap.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dl_graph::{DLGraph, DLParams, DEFAULT_VERTEX_CAP};
use crate::error::Error;
use crate::exporters::{write_scene, ExportFormat, ExportOptions, Palette};
use crate::layout3d::{build_scene, View};
use crate::verify::{run_suite, CheckKind, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// View used by the `dl32-alt` preset. The original figure's second view
/// angle is not recorded, so this value is a stand-in.
pub const ALT_VIEW: View = View::new(105.0, 20.0);

#[derive(Debug, Parser)]
#[command(name = "dlgraph", version, about = "Build, draw and verify Diestel-Leader graphs DL(p,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct GraphArgs {
    /// Arity of the tree drawn in the plane y=0 (orange)
    #[arg(short = 'p', default_value_t = 2)]
    p: u64,
    /// Arity of the tree drawn in the plane x=0 (brown)
    #[arg(short = 'q', default_value_t = 3)]
    q: u64,
    /// Number of layers; the slab spans layers+1 heights
    #[arg(short = 'L', long = "layers", default_value_t = 3)]
    layers: u32,
    /// Maximum number of vertices to build
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: u64,
}

#[derive(Debug, Clone, Args)]
struct ViewArgs {
    /// Camera azimuth in degrees
    #[arg(long, allow_negative_numbers = true)]
    azimuth: Option<f64>,
    /// Camera elevation in degrees
    #[arg(long, allow_negative_numbers = true)]
    elevation: Option<f64>,
}

impl ViewArgs {
    fn resolve(&self, base: View) -> View {
        View::new(
            self.azimuth.unwrap_or(base.azimuth),
            self.elevation.unwrap_or(base.elevation),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Tikz,
    Json,
    Obj,
    Svg,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Tikz => ExportFormat::Tikz,
            FormatArg::Json => ExportFormat::Json,
            FormatArg::Obj => ExportFormat::Obj,
            FormatArg::Svg => ExportFormat::Svg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureName {
    /// DL(3,2) figure from p=2, q=3, 3 layers, view {165}{10}
    Dl32,
    /// Same graph seen from azimuth 105, elevation 20 (non-canonical view)
    Dl32Alt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print vertex, edge, per-height and degree counts
    Stats {
        #[command(flatten)]
        graph: GraphArgs,
        /// Print the census as JSON
        #[arg(long)]
        json: bool,
    },
    /// Serialize the 3D drawing
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 'f', long, value_enum, default_value_t = FormatArg::Tikz)]
        format: FormatArg,
        /// Output file; stdout when omitted
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        view: ViewArgs,
        /// Styles for tree_p,tree_q,dl (xcolor names for tikz, CSS colors for svg)
        #[arg(long, value_name = "P,Q,DL", value_parser = parse_palette)]
        colors: Option<Palette>,
        /// Maximum fractional digits of printed numbers
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=17))]
        digits: u8,
        /// Omit the x/y/z axis labels from the TikZ document
        #[arg(long)]
        no_axis_labels: bool,
    },
    /// Run the structural checks; exit status 1 if any fails
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated subset of checks to run
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<CheckKind>>,
        /// Ball radius for the local homogeneity check
        #[arg(short = 'r', long)]
        radius: Option<u32>,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Emit a preset TikZ figure
    Figure {
        #[arg(long, value_enum, default_value_t = FigureName::Dl32)]
        name: FigureName,
        /// Output file; stdout when omitted
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

impl clap::ValueEnum for CheckKind {
    fn value_variants<'a>() -> &'a [Self] {
        &CheckKind::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

fn parse_palette(s: &str) -> Result<Palette, String> {
    match s.split(',').map(str::trim).collect::<Vec<_>>()[..] {
        [p, q, dl] if !p.is_empty() && !q.is_empty() && !dl.is_empty() => Ok(Palette::new(p, q, dl)),
        _ => Err("expected three comma-separated styles: tree_p,tree_q,dl".to_string()),
    }
}

enum Failure {
    Usage(String),
    Cap(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap_exceeded() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

fn build_graph(args: &GraphArgs) -> Result<DLGraph, Failure> {
    let params = DLParams::new(args.p, args.q, args.layers)?;
    Ok(DLGraph::build_with_cap(params, args.cap)?)
}

fn emit(
    output: &Option<PathBuf>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    match output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::Failed(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
        }
        None => body(stdout)?,
    }
    Ok(())
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Stats { graph, json } => {
            let g = build_graph(&graph)?;
            let census = g.census();
            if json {
                let mut s = serde_json::to_string_pretty(&census).expect("census serializes");
                s.push('\n');
                stdout.write_all(s.as_bytes())?;
            } else {
                write!(stdout, "{census}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Export {
            graph,
            format,
            output,
            view,
            colors,
            digits,
            no_axis_labels,
        } => {
            let g = build_graph(&graph)?;
            let scene = build_scene(&g, view.resolve(View::default()));
            let mut opts = ExportOptions::with_format(format.into());
            opts.decimal_digits = usize::from(digits);
            if no_axis_labels {
                opts.axis_labels.x = false;
                opts.axis_labels.y = false;
                opts.axis_labels.z = false;
            }
            if let Some(palette) = colors {
                match opts.format {
                    ExportFormat::Svg => opts.svg_colors = palette,
                    _ => opts.tikz_colors = palette,
                }
            }
            emit(&output, stdout, |w| write_scene(&scene, &opts, w))?;
            if let Some(path) = &output {
                writeln!(stderr, "wrote {} segments to {}", scene.segments.len(), path.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            checks,
            radius,
            json,
        } => {
            let g = build_graph(&graph)?;
            let opts = SuiteOptions { checks, radius };
            let report = run_suite(&g, &opts)?;
            if json {
                stdout.write_all(report.to_json().as_bytes())?;
            } else {
                write!(stdout, "{report}")?;
            }
            stderr.write_all(report.timings().as_bytes())?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Figure { name, output } => {
            let view = match name {
                FigureName::Dl32 => View::default(),
                FigureName::Dl32Alt => {
                    writeln!(
                        stderr,
                        "note: dl32-alt uses a non-canonical view ({}, {})",
                        ALT_VIEW.azimuth, ALT_VIEW.elevation
                    )?;
                    ALT_VIEW
                }
            };
            let g = DLGraph::build(DLParams::new(2, 3, 3)?)?;
            let scene = build_scene(&g, view);
            let opts = ExportOptions::with_format(ExportFormat::Tikz);
            emit(&output, stdout, |w| write_scene(&scene, &opts, w))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit status.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CAP
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILED
        }
    }
}

/// Runs the command line against the process arguments and standard
/// streams.
pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dlgraph").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn stats_defaults() {
        let (code, out, _) = call(&["stats"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("vertices: 65"));
        assert!(out.contains("edges: 114"));
        assert!(out.contains("degree histogram: {2:27, 3:8, 5:30}"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["stats", "-p", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["stats", "-L", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["export", "--format", "png"]).0, EXIT_USAGE);
        assert_eq!(call(&["export", "--colors", "a,b"]).0, EXIT_USAGE);
        assert_eq!(call(&["export", "--digits", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--checks", "nope"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["verify", "-r", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("radius"));
    }

    #[test]
    fn cap_exceeded_exits_3() {
        assert_eq!(call(&["stats", "-p", "4", "-q", "4", "-L", "12"]).0, EXIT_CAP);
        assert_eq!(call(&["stats", "--cap", "64"]).0, EXIT_CAP);
        assert_eq!(call(&["stats", "--cap", "65"]).0, EXIT_OK);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["figure", "--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("non-canonical"));
    }

    #[test]
    fn verify_selected_checks() {
        let (code, out, err) = call(&["verify", "-p", "2", "-q", "3", "--checks", "counts,lamplighter"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("[pass] counts"));
        assert!(out.contains("[not applicable] lamplighter"));
        assert!(err.contains("ms"));
        assert!(!out.contains(" ms"));
    }

    #[test]
    fn export_colors_and_view() {
        let (code, out, _) = call(&[
            "export", "-p", "2", "-q", "2", "-L", "1", "--azimuth", "-30", "--elevation", "45",
            "--colors", "red,green,blue",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("view={-30}{45}"));
        assert!(out.contains(r"\addplot3[blue,thick]"));
        let (_, svg, _) = call(&["export", "-L", "1", "-f", "svg", "--colors", "#111,#222,#333"]);
        assert!(svg.contains(r##"stroke="#333""##));
    }
}
