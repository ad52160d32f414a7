//! SVG pictures of point sets on the torus `[0, 2π)²`, with optional shear
//! graphs and the slice-path corridor.

use knotapoly::perturb::{path_segments, ShearFn};
use std::f64::consts::{PI, TAU};
use std::fmt::Write;

const MARGIN: f64 = 56.0;
const GRAPH_SAMPLES: usize = 720;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub point_radius: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width: 720,
            height: 720,
            point_radius: 2.0,
        }
    }
}

/// Slice-path overlay: the path at height `h` widened by `corridor`.
#[derive(Clone, Debug)]
pub struct PathOverlay {
    pub height: f64,
    pub corridor: f64,
}

#[derive(Clone, Debug, Default)]
pub struct Overlays {
    pub second_set: Vec<(f64, f64)>,
    pub shears: Vec<ShearFn>,
    pub path: Option<PathOverlay>,
}

struct Frame {
    w: f64,
    h: f64,
}

impl Frame {
    fn x(&self, theta: f64) -> f64 {
        MARGIN + theta / TAU * (self.w - 2.0 * MARGIN)
    }
    fn y(&self, eta: f64) -> f64 {
        self.h - MARGIN - eta / TAU * (self.h - 2.0 * MARGIN)
    }
    fn sx(&self) -> f64 {
        (self.w - 2.0 * MARGIN) / TAU
    }
    fn sy(&self) -> f64 {
        (self.h - 2.0 * MARGIN) / TAU
    }
}

const TICKS: [&str; 5] = ["0", "π/2", "π", "3π/2", "2π"];

/// Copies shifted by `(2πi, 2πj)`, `i, j ∈ {−1, 0, 1}`, clipped to the
/// plot area, so wrapped geometry shows on every side.
const SHIFTS: [(f64, f64); 9] = [
    (-TAU, -TAU),
    (-TAU, 0.0),
    (-TAU, TAU),
    (0.0, -TAU),
    (0.0, 0.0),
    (0.0, TAU),
    (TAU, -TAU),
    (TAU, 0.0),
    (TAU, TAU),
];

fn polyline(out: &mut String, f: &Frame, pts: &[(f64, f64)], class: &str) {
    for (dx, dy) in SHIFTS {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(t, e)| format!("{:.3},{:.3}", f.x(t + dx), f.y(e + dy)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline class="{class}" points="{}"/>"#,
            coords.join(" ")
        );
    }
}

/// Graph `{(θ, g(θ))}` over one period.
pub fn shear_graph(g: &ShearFn) -> Vec<(f64, f64)> {
    (0..=GRAPH_SAMPLES)
        .map(|k| {
            let t = TAU * k as f64 / GRAPH_SAMPLES as f64;
            (t, g.eval(t))
        })
        .collect()
}

/// Axis-aligned rectangles `(θ₀, η₀, θ₁, η₁)` whose union is the
/// max-metric `w`-neighbourhood of the path at height `h`.
pub fn corridor_rects(h: f64, w: f64) -> Vec<(f64, f64, f64, f64)> {
    path_segments(h)
        .into_iter()
        .map(|(a, b)| {
            (
                a.0.min(b.0) - w,
                a.1.min(b.1) - w,
                a.0.max(b.0) + w,
                a.1.max(b.1) + w,
            )
        })
        .collect()
}

pub fn render_pillowcase(
    points: &[(f64, f64)],
    overlays: &Overlays,
    opts: &RenderOptions,
) -> String {
    let f = Frame {
        w: opts.width as f64,
        h: opts.height as f64,
    };
    let (x0, x1, y0, y1) = (f.x(0.0), f.x(TAU), f.y(TAU), f.y(0.0));
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        s,
        "<style>.grid{{stroke:#c8c8c8;stroke-width:1}} .frame{{fill:none;stroke:#000;stroke-width:1}} \
         .band{{fill:#f6d7a7;fill-opacity:0.6;stroke:none}} .path{{fill:none;stroke:#b05a00;stroke-width:1.5;stroke-dasharray:4 3}} \
         .graph{{fill:none;stroke:#1f5fbf;stroke-width:1.5}} .set0{{fill:#000}} .set1{{fill:none;stroke:#d0302a;stroke-width:1}} \
         text{{font-family:sans-serif;font-size:12px}}</style>"
    );
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot"><rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/></clipPath></defs>"#,
        x0,
        y0,
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{}" height="{}" fill="#fff"/>"##,
        opts.width, opts.height
    );

    s.push_str("<g class=\"axes\">\n");
    for (k, label) in TICKS.iter().enumerate() {
        let a = k as f64 * PI / 2.0;
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{:.3}" y1="{y0:.3}" x2="{:.3}" y2="{y1:.3}"/>"#,
            f.x(a),
            f.x(a)
        );
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{x0:.3}" y1="{:.3}" x2="{x1:.3}" y2="{:.3}"/>"#,
            f.y(a),
            f.y(a)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">{label}</text>"#,
            f.x(a),
            y1 + 18.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{label}</text>"#,
            x0 - 8.0,
            f.y(a) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">θ</text>"#,
        (x0 + x1) / 2.0,
        y1 + 38.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">η</text>"#,
        x0 - 38.0,
        (y0 + y1) / 2.0
    );
    let _ = writeln!(
        s,
        r#"<rect class="frame" x="{x0:.3}" y="{y0:.3}" width="{:.3}" height="{:.3}"/>"#,
        x1 - x0,
        y1 - y0
    );
    s.push_str("</g>\n");

    s.push_str("<g clip-path=\"url(#plot)\">\n");
    if let Some(p) = &overlays.path {
        s.push_str("<g class=\"corridor\">\n");
        for (a0, b0, a1, b1) in corridor_rects(p.height, p.corridor) {
            for (dx, dy) in SHIFTS {
                let _ = writeln!(
                    s,
                    r#"<rect class="band" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
                    f.x(a0 + dx),
                    f.y(b1 + dy),
                    (a1 - a0) * f.sx(),
                    (b1 - b0) * f.sy()
                );
            }
        }
        for (a, b) in path_segments(p.height) {
            polyline(&mut s, &f, &[a, b], "path");
        }
        s.push_str("</g>\n");
    }
    for g in &overlays.shears {
        polyline(&mut s, &f, &shear_graph(g), "graph");
    }
    s.push_str("</g>\n");

    s.push_str("<g class=\"points\">\n");
    for &(t, e) in points {
        let _ = writeln!(
            s,
            r#"<circle class="set0" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
            f.x(t.rem_euclid(TAU)),
            f.y(e.rem_euclid(TAU)),
            opts.point_radius
        );
    }
    for &(t, e) in &overlays.second_set {
        let _ = writeln!(
            s,
            r#"<circle class="set1" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
            f.x(t.rem_euclid(TAU)),
            f.y(e.rem_euclid(TAU)),
            opts.point_radius * 1.5
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_set_has_axes_only() {
        let svg = render_pillowcase(&[], &Overlays::default(), &RenderOptions::default());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 0);
        assert_eq!(svg.matches(r#"class="grid""#).count(), 10);
        assert!(svg.contains(">3π/2<"));
    }

    #[test]
    fn deterministic() {
        let pts = [(0.5, 1.0), (2.0, 5.0)];
        let o = Overlays {
            second_set: vec![(1.0, 1.0)],
            shears: vec![ShearFn::zero()],
            path: Some(PathOverlay {
                height: 1.0,
                corridor: 0.2,
            }),
        };
        let a = render_pillowcase(&pts, &o, &RenderOptions::default());
        let b = render_pillowcase(&pts, &o, &RenderOptions::default());
        assert_eq!(a, b);
        assert_eq!(a.matches(r#"class="set0""#).count(), 2);
        assert_eq!(a.matches(r#"class="set1""#).count(), 1);
    }
}
