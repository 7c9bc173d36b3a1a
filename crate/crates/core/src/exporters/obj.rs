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

//! Wavefront OBJ polyline output: deduplicated `v` records in order of first
//! appearance, then one `g` group per segment kind holding its `l` records.

use std::collections::HashMap;
use std::io::{self, Write};

use super::{format_number, ExportOptions};
use crate::layout3d::{Point3, Scene3D, SegmentKind};

/// Distinct endpoints in first-appearance order, and for each segment the
/// 0-based indices of its endpoints.
pub fn index_endpoints(scene: &Scene3D) -> (Vec<Point3>, Vec<(usize, usize)>) {
    let mut points = Vec::new();
    let mut seen: HashMap<Point3, usize> = HashMap::new();
    let mut intern = |p: Point3| {
        *seen.entry(p).or_insert_with(|| {
            points.push(p);
            points.len() - 1
        })
    };
    let pairs = scene
        .segments
        .iter()
        .map(|s| (intern(s.upper), intern(s.lower)))
        .collect();
    (points, pairs)
}

pub fn write_obj<W: Write + ?Sized>(scene: &Scene3D, opts: &ExportOptions, out: &mut W) -> io::Result<()> {
    let digits = opts.digits();
    let (points, pairs) = index_endpoints(scene);
    let params = scene.params;
    writeln!(
        out,
        "# DL({},{}) slab with {} layers",
        params.p(),
        params.q(),
        params.layers()
    )?;
    writeln!(out, "# {} vertices, {} segments", points.len(), pairs.len())?;
    for p in &points {
        writeln!(
            out,
            "v {} {} {}",
            format_number(p.x.to_f64(), digits),
            format_number(p.y.to_f64(), digits),
            format_number(p.z.to_f64(), digits)
        )?;
    }
    for kind in SegmentKind::ALL {
        writeln!(out, "g {}", kind.as_str())?;
        for (seg, (a, b)) in scene.segments.iter().zip(&pairs) {
            if seg.kind == kind {
                writeln!(out, "l {} {}", a + 1, b + 1)?;
            }
        }
    }
    Ok(())
}

pub fn export_obj(scene: &Scene3D, opts: &ExportOptions) -> String {
    let mut buf = Vec::new();
    write_obj(scene, opts, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("UTF-8 output")
}
