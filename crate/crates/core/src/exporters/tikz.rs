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

//! Standalone LaTeX document drawing the scene with pgfplots. Coordinates
//! are written out literally, one `\addplot3` per segment in scene order;
//! brown tree segments are pushed to the background layer.

use std::io::{self, Write};

use super::{format_number, ExportOptions};
use crate::layout3d::{Point3, Scene3D, SegmentKind};

const PREAMBLE: &str = r"\documentclass[border=0mm]{standalone}
\usepackage[x11names]{xcolor}
\usepackage{tikz}
\usetikzlibrary{backgrounds}
\usepackage{pgfplots}
\pgfplotsset{compat=1.18}

\definecolor{MFCB}{cmyk}{0,0.06,0.20,0.6}
\colorlet{Orange}{DarkOrange3!85}

\begin{document}
\begin{tikzpicture}
  \begin{axis}[
";

const CLOSING: &str = r"  \end{axis}
\end{tikzpicture}
\end{document}
";

fn coordinate(p: &Point3, digits: usize) -> String {
    format!(
        "({},{},{})",
        format_number(p.x.to_f64(), digits),
        format_number(p.y.to_f64(), digits),
        format_number(p.z.to_f64(), digits)
    )
}

pub fn write_tikz<W: Write + ?Sized>(scene: &Scene3D, opts: &ExportOptions, out: &mut W) -> io::Result<()> {
    let digits = opts.digits();
    let view = opts.view_for(scene);
    out.write_all(PREAMBLE.as_bytes())?;
    writeln!(
        out,
        "    view={{{}}}{{{}}},",
        format_number(view.azimuth, digits),
        format_number(view.elevation, digits)
    )?;
    let labels = opts.axis_labels;
    for (on, axis) in [(labels.x, 'x'), (labels.z, 'z'), (labels.y, 'y')] {
        if on {
            writeln!(out, "    {axis}label=${axis}$,")?;
        }
    }
    writeln!(out, "    ]")?;
    for seg in &scene.segments {
        let statement = format!(
            "\\addplot3[{},thick] coordinates {{{} {}}};",
            opts.tikz_colors.get(seg.kind),
            coordinate(&seg.upper, digits),
            coordinate(&seg.lower, digits)
        );
        if seg.kind == SegmentKind::TreeQ {
            writeln!(out, "    \\begin{{scope}}[on background layer]")?;
            writeln!(out, "      {statement}")?;
            writeln!(out, "    \\end{{scope}}")?;
        } else {
            writeln!(out, "    {statement}")?;
        }
    }
    out.write_all(CLOSING.as_bytes())
}

pub fn export_tikz(scene: &Scene3D, opts: &ExportOptions) -> String {
    let mut buf = Vec::new();
    write_tikz(scene, opts, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("UTF-8 output")
}
