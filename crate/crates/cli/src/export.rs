use std::fmt::Write;

use affcover_drawing::{CoverKind, CoverObject};
use num_traits::ToPrimitive;

use crate::cert::Loaded;
use crate::CliError;

const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];
const SIZE: f64 = 480.0;
const PAD: f64 = 24.0;

fn color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Maps drawing coordinates onto the canvas, y pointing up.
struct Frame {
    min: [f64; 2],
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(pts: &[[f64; 2]]) -> Self {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in pts {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        if pts.is_empty() {
            min = [0.0; 2];
            max = [1.0; 2];
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
        let scale = (SIZE - 2.0 * PAD) / span;
        let height = (max[1] - min[1]) * scale + 2.0 * PAD;
        Frame { min, scale, height }
    }

    fn map(&self, p: [f64; 2]) -> [f64; 2] {
        [PAD + (p[0] - self.min[0]) * self.scale, self.height - PAD - (p[1] - self.min[1]) * self.scale]
    }

    fn width(&self, pts: &[[f64; 2]]) -> f64 {
        pts.iter().map(|p| self.map(*p)[0]).fold(0.0, f64::max) + PAD
    }
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn vertices(out: &mut String, pts: &[[f64; 2]], fill: impl Fn(usize) -> &'static str) {
    out.push_str("<g class=\"vertices\">\n");
    for (v, p) in pts.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="{}" data-vertex="{v}"/>"#,
            p[0],
            p[1],
            fill(v)
        );
    }
    out.push_str("</g>\n");
}

/// Clips the line `base + t dir` to the box `[lo, hi]`.
fn clip(base: [f64; 2], dir: [f64; 2], lo: [f64; 2], hi: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..2 {
        if dir[i].abs() < 1e-12 {
            if base[i] < lo[i] || base[i] > hi[i] {
                return None;
            }
            continue;
        }
        let (a, b) = ((lo[i] - base[i]) / dir[i], (hi[i] - base[i]) / dir[i]);
        t0 = t0.max(a.min(b));
        t1 = t1.min(a.max(b));
    }
    (t0 <= t1).then(|| {
        let at = |t: f64| [base[0] + t * dir[0], base[1] + t * dir[1]];
        (at(t0), at(t1))
    })
}

/// Planar drawing with its edges and, for line witnesses, the cover lines dashed.
pub fn svg2d(c: &Loaded) -> Result<String, CliError> {
    let d = &c.drawing;
    if d.dim() != 2 {
        return Err(CliError::Usage(format!("svg2d needs a planar drawing, got dimension {}", d.dim())));
    }
    let raw: Vec<[f64; 2]> = d
        .points()
        .iter()
        .map(|p| {
            let f = p.to_f64();
            [f[0], f[1]]
        })
        .collect();
    let frame = Frame::fit(&raw);
    let pts: Vec<[f64; 2]> = raw.iter().map(|&p| frame.map(p)).collect();
    let (w, h) = (frame.width(&raw).max(2.0 * PAD), frame.height);
    let mut out = String::new();
    header(&mut out, w, h);
    out.push_str("<g class=\"cover\">\n");
    let slack = PAD / frame.scale;
    let lo = [frame.min[0] - slack, frame.min[1] - slack];
    let hi = [frame.min[0] + (w - PAD) / frame.scale, frame.min[1] + (h - PAD) / frame.scale];
    for (i, o) in c.witness.objects.iter().enumerate() {
        if let CoverObject::Line(l) = o {
            let base = [l.base()[0].to_f64().unwrap_or(0.0), l.base()[1].to_f64().unwrap_or(0.0)];
            let dir = [l.direction()[0].to_f64().unwrap_or(0.0), l.direction()[1].to_f64().unwrap_or(0.0)];
            if let Some((a, b)) = clip(base, dir, lo, hi) {
                let (a, b) = (frame.map(a), frame.map(b));
                let _ = writeln!(
                    out,
                    r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="1" stroke-dasharray="6 4" data-object="{i}"/>"#,
                    a[0],
                    a[1],
                    b[0],
                    b[1],
                    color(i)
                );
            }
        }
    }
    out.push_str("</g>\n<g class=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n");
    for &(u, v) in d.graph().edges() {
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            pts[u][0], pts[u][1], pts[v][0], pts[v][1]
        );
    }
    out.push_str("</g>\n");
    vertices(&mut out, &pts, |_| "black");
    out.push_str("</svg>\n");
    Ok(out)
}

/// Isometric view of the lifted drawing; items take the colour of their cover object.
pub fn svg_iso3d(c: &Loaded) -> Result<String, CliError> {
    let d = c.drawing.lifted();
    let (c30, s30) = (std::f64::consts::FRAC_PI_6.cos(), 0.5);
    let raw: Vec<[f64; 2]> = d
        .points()
        .iter()
        .map(|p| {
            let f = p.to_f64();
            [(f[0] - f[1]) * c30, (f[0] + f[1]) * s30 + f[2]]
        })
        .collect();
    let frame = Frame::fit(&raw);
    let pts: Vec<[f64; 2]> = raw.iter().map(|&p| frame.map(p)).collect();
    let (w, h) = (frame.width(&raw).max(2.0 * PAD), frame.height);
    let mut out = String::new();
    header(&mut out, w, h);
    let w_ = &c.witness;
    let objects = w_.objects.len();
    if w_.kind.covers_edges() {
        let edges = d.graph().edges();
        for obj in 0..objects {
            let kind = if w_.kind == CoverKind::PlanesForEdges { "plane" } else { "line" };
            let _ =
                writeln!(out, r#"<g class="{kind}" data-object="{obj}" stroke="{}" stroke-width="1.5">"#, color(obj));
            for (e, &(u, v)) in edges.iter().enumerate() {
                if w_.assignment[e] == obj {
                    let _ = writeln!(
                        out,
                        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                        pts[u][0], pts[u][1], pts[v][0], pts[v][1]
                    );
                }
            }
            out.push_str("</g>\n");
        }
        vertices(&mut out, &pts, |_| "black");
    } else {
        out.push_str("<g class=\"edges\" stroke=\"#555555\" stroke-width=\"1\">\n");
        for &(u, v) in d.graph().edges() {
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                pts[u][0], pts[u][1], pts[v][0], pts[v][1]
            );
        }
        out.push_str("</g>\n");
        let assignment = w_.assignment.clone();
        vertices(&mut out, &pts, move |v| color(assignment[v]));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Wavefront OBJ: one vertex record per vertex, one polyline per edge.
pub fn obj(c: &Loaded) -> String {
    let d = c.drawing.lifted();
    let mut out = String::new();
    let _ = writeln!(out, "# affcover {} {}", c.meta.construction, affcover_core::io::to_graph6(d.graph()));
    for p in d.points() {
        let f = p.to_f64();
        let _ = writeln!(out, "v {} {} {}", f[0], f[1], f[2]);
    }
    for &(u, v) in d.graph().edges() {
        let _ = writeln!(out, "l {} {}", u + 1, v + 1);
    }
    out
}
