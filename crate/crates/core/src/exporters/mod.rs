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

//! Serializers for [`Scene3D`]: a standalone TikZ/pgfplots document, a JSON
//! object, Wavefront OBJ and an orthographic SVG. Every writer is
//! deterministic and takes any [`std::io::Write`] sink.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::layout3d::{Scene3D, SegmentKind, View};

pub mod json;
pub mod obj;
pub mod svg;
pub mod tikz;

pub use json::{export_json, write_json};
pub use obj::{export_obj, write_obj};
pub use svg::{export_svg, write_svg, Projection};
pub use tikz::{export_tikz, write_tikz};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ExportFormat {
    #[default]
    Tikz,
    Json,
    Obj,
    Svg,
}

impl ExportFormat {
    pub const ALL: [ExportFormat; 4] = [
        ExportFormat::Tikz,
        ExportFormat::Json,
        ExportFormat::Obj,
        ExportFormat::Svg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExportFormat::Tikz => "tikz",
            ExportFormat::Json => "json",
            ExportFormat::Obj => "obj",
            ExportFormat::Svg => "svg",
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExportFormat::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown format `{s}` (expected tikz, json, obj or svg)"))
    }
}

/// One style string per segment kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub tree_p: String,
    pub tree_q: String,
    pub dl: String,
}

impl Palette {
    pub fn new(tree_p: impl Into<String>, tree_q: impl Into<String>, dl: impl Into<String>) -> Self {
        Palette {
            tree_p: tree_p.into(),
            tree_q: tree_q.into(),
            dl: dl.into(),
        }
    }

    /// Named xcolor styles used in the TikZ document.
    pub fn tikz() -> Self {
        Palette::new("Orange!20", "MFCB!20", "DeepSkyBlue4")
    }

    /// Hex approximations of the TikZ styles.
    pub fn svg() -> Self {
        Palette::new("#F5C089", "#B9AF8F", "#00688B")
    }

    pub fn get(&self, kind: SegmentKind) -> &str {
        match kind {
            SegmentKind::TreeP => &self.tree_p,
            SegmentKind::TreeQ => &self.tree_q,
            SegmentKind::Dl => &self.dl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisLabels {
    pub x: bool,
    pub y: bool,
    pub z: bool,
}

impl Default for AxisLabels {
    fn default() -> Self {
        AxisLabels {
            x: true,
            y: true,
            z: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExportOptions {
    pub format: ExportFormat,
    /// Overrides the scene's own view when set.
    pub view: Option<View>,
    pub tikz_colors: Palette,
    pub svg_colors: Palette,
    pub axis_labels: AxisLabels,
    pub decimal_digits: usize,
}

impl Default for ExportOptions {
    fn default() -> Self {
        ExportOptions {
            format: ExportFormat::Tikz,
            view: None,
            tikz_colors: Palette::tikz(),
            svg_colors: Palette::svg(),
            axis_labels: AxisLabels::default(),
            decimal_digits: 6,
        }
    }
}

impl ExportOptions {
    pub fn with_format(format: ExportFormat) -> Self {
        ExportOptions {
            format,
            ..Default::default()
        }
    }

    pub fn view_for(&self, scene: &Scene3D) -> View {
        self.view.unwrap_or(scene.view)
    }

    pub(crate) fn digits(&self) -> usize {
        self.decimal_digits.max(1)
    }
}

/// Shortest decimal with at most `digits` fractional digits: trailing
/// zeros and a bare point are trimmed, `-0` prints as `0`.
pub fn format_number(value: f64, digits: usize) -> String {
    let mut s = format!("{:.*}", digits.max(1), value);
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Writes `scene` in `opts.format`.
pub fn write_scene<W: Write + ?Sized>(scene: &Scene3D, opts: &ExportOptions, out: &mut W) -> io::Result<()> {
    match opts.format {
        ExportFormat::Tikz => write_tikz(scene, opts, out),
        ExportFormat::Json => write_json(scene, opts, out),
        ExportFormat::Obj => write_obj(scene, opts, out),
        ExportFormat::Svg => write_svg(scene, opts, out),
    }
}

pub fn export(scene: &Scene3D, opts: &ExportOptions) -> String {
    let mut buf = Vec::new();
    write_scene(scene, opts, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("exporters emit UTF-8")
}
