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

//! Orthographic SVG rendering.
//!
//! With azimuth `α` and elevation `ε` a point `(x, y, z)` lands at
//!
//! ```text
//! u = −sin α · x + cos α · y
//! v =  cos ε · z − sin ε · (cos α · x + sin α · y)
//! ```
//!
//! and is drawn at `(u, −v)` so that `z` grows upwards on screen. The camera
//! convention is this crate's own; it is not claimed to match pgfplots.
//!
//! The trigonometric coefficients are quantized to fixed point once, which
//! makes the projection an exact integer-linear map of the half-unit scene
//! coordinates. Rounding to `f64` only happens when the document is printed.

use std::io::{self, Write};

use super::{format_number, ExportOptions};
use crate::layout3d::{Point3, Scene3D, SegmentKind, View};

const COEFF_BITS: u32 = 32;
/// Projected values are integers in units of `2^-SCREEN_BITS`.
const SCREEN_BITS: i32 = 2 * COEFF_BITS as i32 + 1;

fn quantize(c: f64) -> i128 {
    (c * (1u64 << COEFF_BITS) as f64).round() as i128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projection {
    sin_a: i128,
    cos_a: i128,
    sin_e: i128,
    cos_e: i128,
}

/// Exact projected screen position (before the y flip).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScreenPoint {
    pub u: i128,
    pub v: i128,
}

impl ScreenPoint {
    pub fn to_f64(self) -> (f64, f64) {
        let scale = 2f64.powi(-SCREEN_BITS);
        (self.u as f64 * scale, self.v as f64 * scale)
    }
}

impl Projection {
    pub fn new(view: View) -> Self {
        let (a, e) = (view.azimuth.to_radians(), view.elevation.to_radians());
        Projection {
            sin_a: quantize(a.sin()),
            cos_a: quantize(a.cos()),
            sin_e: quantize(e.sin()),
            cos_e: quantize(e.cos()),
        }
    }

    pub fn project(&self, p: Point3) -> ScreenPoint {
        let (x, y, z) = (
            i128::from(p.x.twice()),
            i128::from(p.y.twice()),
            i128::from(p.z.twice()),
        );
        let one = 1i128 << COEFF_BITS;
        let u = (-self.sin_a * x + self.cos_a * y) * one;
        let v = self.cos_e * z * one - self.sin_e * (self.cos_a * x + self.sin_a * y);
        ScreenPoint { u, v }
    }

    /// Screen coordinates with the y axis pointing down.
    pub fn to_screen(&self, p: Point3) -> (f64, f64) {
        let (u, v) = self.project(p).to_f64();
        (u, -v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewBox {
    pub min_x: f64,
    pub min_y: f64,
    pub width: f64,
    pub height: f64,
}

/// Bounding box of `points` grown by 5% of its larger side on every edge; a
/// single point gets a unit box centred on it.
pub fn view_box(points: impl IntoIterator<Item = (f64, f64)>) -> ViewBox {
    let mut iter = points.into_iter();
    let Some((x0, y0)) = iter.next() else {
        return ViewBox { min_x: -0.5, min_y: -0.5, width: 1.0, height: 1.0 };
    };
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (x0, x0, y0, y0);
    for (x, y) in iter {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let extent = (hi_x - lo_x).max(hi_y - lo_y);
    if extent <= 0.0 {
        return ViewBox {
            min_x: lo_x - 0.5,
            min_y: lo_y - 0.5,
            width: 1.0,
            height: 1.0,
        };
    }
    let margin = 0.05 * extent;
    ViewBox {
        min_x: lo_x - margin,
        min_y: lo_y - margin,
        width: hi_x - lo_x + 2.0 * margin,
        height: hi_y - lo_y + 2.0 * margin,
    }
}

const DRAW_ORDER: [SegmentKind; 3] = [SegmentKind::TreeQ, SegmentKind::TreeP, SegmentKind::Dl];

pub fn write_svg<W: Write + ?Sized>(scene: &Scene3D, opts: &ExportOptions, out: &mut W) -> io::Result<()> {
    let digits = opts.digits();
    let num = |v: f64| format_number(v, digits);
    let proj = Projection::new(opts.view_for(scene));
    let screen: Vec<_> = scene
        .segments
        .iter()
        .map(|s| (proj.to_screen(s.upper), proj.to_screen(s.lower)))
        .collect();
    let vb = view_box(screen.iter().flat_map(|&(a, b)| [a, b]));
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        num(vb.min_x),
        num(vb.min_y),
        num(vb.width),
        num(vb.height)
    )?;
    for kind in DRAW_ORDER {
        writeln!(
            out,
            r#"  <g class="{}" stroke="{}" stroke-width="1" stroke-linecap="round" fill="none">"#,
            kind.as_str(),
            opts.svg_colors.get(kind)
        )?;
        for (seg, &((x1, y1), (x2, y2))) in scene.segments.iter().zip(&screen) {
            if seg.kind != kind {
                continue;
            }
            writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" vector-effect="non-scaling-stroke"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2)
            )?;
        }
        writeln!(out, "  </g>")?;
    }
    writeln!(out, "</svg>")
}

pub fn export_svg(scene: &Scene3D, opts: &ExportOptions) -> String {
    let mut buf = Vec::new();
    write_svg(scene, opts, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("UTF-8 output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dl_graph::{DLGraph, DLParams};
    use crate::layout3d::{build_scene, Half};
    use proptest::prelude::*;

    fn p3(x: i64, y: i64, z: i64) -> Point3 {
        Point3::new(Half::from_twice(x), Half::from_twice(y), Half::from_twice(z))
    }

    #[test]
    fn axis_aligned_cameras() {
        let front = Projection::new(View::new(0.0, 0.0));
        let quarter = Projection::new(View::new(90.0, 0.0));
        for (x, y, z) in [(7, 26, 6), (0, 0, 0), (-3, 5, 2), (11, -9, 4)] {
            let pt = p3(x, y, z);
            let (fx, fy, fz) = (x as f64 / 2.0, y as f64 / 2.0, z as f64 / 2.0);
            assert_eq!(front.project(pt).to_f64(), (fy, fz));
            assert_eq!(quarter.project(pt).to_f64(), (-fx, fz));
        }
    }

    #[test]
    fn line_count_and_order() {
        let g = DLGraph::build(DLParams::new(2, 3, 3).unwrap()).unwrap();
        let s = build_scene(&g, View::default());
        let text = export_svg(&s, &ExportOptions::default());
        assert_eq!(text.matches("<line ").count(), 167);
        let q = text.find(r#"class="tree_q""#).unwrap();
        let p = text.find(r#"class="tree_p""#).unwrap();
        let d = text.find(r#"class="dl""#).unwrap();
        assert!(q < p && p < d);
        assert!(text.contains("#00688B"));
    }

    #[test]
    fn degenerate_view_box() {
        assert_eq!(
            view_box([(2.0, 3.0), (2.0, 3.0)]),
            ViewBox { min_x: 1.5, min_y: 2.5, width: 1.0, height: 1.0 }
        );
        let vb = view_box([(0.0, 0.0), (10.0, 4.0)]);
        assert_eq!((vb.min_x, vb.min_y, vb.width, vb.height), (-0.5, -0.5, 11.0, 5.0));
    }

    proptest! {
        #[test]
        fn projection_is_exactly_linear(
            az in -360.0f64..360.0, el in -90.0f64..90.0,
            a in proptest::array::uniform3(-1000i64..1000),
            d in proptest::array::uniform3(-500i64..500),
        ) {
            // b = a + 2d keeps the midpoint on the half grid
            let proj = Projection::new(View::new(az, el));
            let pa = p3(a[0], a[1], a[2]);
            let pb = p3(a[0] + 2 * d[0], a[1] + 2 * d[1], a[2] + 2 * d[2]);
            let mid = p3(a[0] + d[0], a[1] + d[1], a[2] + d[2]);
            let (sa, sb, sm) = (proj.project(pa), proj.project(pb), proj.project(mid));
            prop_assert_eq!(2 * sm.u, sa.u + sb.u);
            prop_assert_eq!(2 * sm.v, sa.v + sb.v);
        }
    }
}
