//! SVG figures: dilated bodies, cone rays, semigroup points and generators.

use std::fmt::Write;

use crate::body::{cone_of_body, ConeShape, ConvexBody2, RayInfo};
use crate::lattice::{GenSet, IntVec2};
use crate::semigroup::{member, min_gens};

const SCALE: f64 = 16.0;
const MARGIN: f64 = 16.0;

pub struct PlotOptions {
    /// Number of dilations `F, 2F, …` drawn.
    pub dilations: u32,
    /// Lattice points with both coordinates at most this value are shown.
    pub norm_bound: i64,
}

struct Frame {
    n: f64,
}

impl Frame {
    fn x(&self, x: f64) -> f64 {
        MARGIN + x * SCALE
    }

    fn y(&self, y: f64) -> f64 {
        MARGIN + (self.n - y) * SCALE
    }

    fn size(&self) -> f64 {
        2.0 * MARGIN + self.n * SCALE
    }
}

fn ray_dirs(shape: &ConeShape) -> Vec<(f64, f64)> {
    let dir = |r: &RayInfo| match r.primitive {
        Some(g) => (g.x as f64, g.y as f64),
        None => r.hit.near().to_f64(),
    };
    match shape {
        ConeShape::FullQuadrant => vec![(1.0, 0.0), (0.0, 1.0)],
        ConeShape::SingleRay(r) => vec![dir(r)],
        ConeShape::Rays { hi, lo } => vec![dir(hi), dir(lo)],
        ConeShape::Zero | ConeShape::Open(_) => Vec::new(),
    }
}

/// Renders the figure. The root element carries `data-markers`, the number
/// of lattice-point markers (one per semigroup element in the window).
pub fn plot(body: &ConvexBody2, opts: &PlotOptions) -> String {
    let n = opts.norm_bound.max(1);
    let f = Frame { n: n as f64 };
    let gens: GenSet = min_gens(body).unwrap_or_else(|_| GenSet::empty());
    let members: Vec<IntVec2> = (0..=n)
        .flat_map(|x| (0..=n).map(move |y| IntVec2::new(x, y)))
        .filter(|p| member(body, *p))
        .collect();

    let mut s = String::new();
    let size = f.size();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}" data-markers="{}">"#,
        members.len()
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        s,
        r##"<g stroke="#999999" stroke-width="1"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"##,
        f.x(0.0),
        f.y(0.0),
        f.x(f.n),
        f.y(0.0),
        f.x(0.0),
        f.y(0.0),
        f.x(0.0),
        f.y(f.n)
    );

    let _ = writeln!(
        s,
        r##"<g class="dilations" fill="#4a90d9" fill-opacity="0.25" stroke="#2a70b9" stroke-width="1">"##
    );
    for i in 1..=opts.dilations {
        let k = i as f64;
        match body {
            ConvexBody2::Circle(c) => {
                let (a, b, r) = (
                    crate::exactnum::to_f64(&c.a),
                    crate::exactnum::to_f64(&c.b),
                    crate::exactnum::to_f64(&c.r),
                );
                let _ = writeln!(
                    s,
                    r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
                    f.x(k * a),
                    f.y(k * b),
                    k * r * SCALE
                );
            }
            ConvexBody2::Polygon(p) => {
                let pts: Vec<String> = p
                    .vertices()
                    .iter()
                    .map(|v| {
                        let (x, y) = v.to_f64();
                        format!("{:.3},{:.3}", f.x(k * x), f.y(k * y))
                    })
                    .collect();
                let _ = writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" "));
            }
            ConvexBody2::Segment(seg) => {
                let (p, q) = seg.endpoints();
                let ((px, py), (qx, qy)) = (p.to_f64(), q.to_f64());
                let _ = writeln!(
                    s,
                    r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke-width="3"/>"#,
                    f.x(k * px),
                    f.y(k * py),
                    f.x(k * qx),
                    f.y(k * qy)
                );
            }
        }
    }
    let _ = writeln!(s, "</g>");

    if let Ok(shape) = cone_of_body(body) {
        let _ = writeln!(
            s,
            r##"<g class="rays" stroke="#d0021b" stroke-width="1.5">"##
        );
        for (dx, dy) in ray_dirs(&shape) {
            let t = f.n / dx.max(dy).max(f64::MIN_POSITIVE);
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{:.3}" y2="{:.3}"/>"#,
                f.x(0.0),
                f.y(0.0),
                f.x(t * dx),
                f.y(t * dy)
            );
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, r#"<g class="lattice">"#);
    for p in &members {
        let (class, r, fill) = if gens.contains(p) {
            ("member generator", 4.0, "#f5a623")
        } else {
            ("member", 2.0, "#333333")
        };
        let _ = writeln!(
            s,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{r}" fill="{fill}"/>"#,
            f.x(p.x as f64),
            f.y(p.y as f64)
        );
    }
    let _ = writeln!(s, "</g>\n</svg>");
    s
}
