use std::fmt::Write;

use super::Arrangement;
use crate::field::{embed_real, to_f64};

/// Real viewing box and output size in pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub width: u32,
    pub height: u32,
}

impl Window {
    pub fn square(half: f64) -> Window {
        Window { xmin: -half, xmax: half, ymin: -half, ymax: half, width: 600, height: 600 }
    }
}

const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];
const PLAIN: &str = "#333333";

/// Segment of `a·x + b·y + c = 0` inside the window, if any.
pub(crate) fn clip(a: f64, b: f64, c: f64, w: &Window) -> Option<((f64, f64), (f64, f64))> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-12 * (w.xmax - w.xmin).abs().max(w.ymax - w.ymin).max(1.0);
    if b.abs() > 1e-15 {
        for x in [w.xmin, w.xmax] {
            let y = -(a * x + c) / b;
            if y >= w.ymin - eps && y <= w.ymax + eps {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > 1e-15 {
        for y in [w.ymin, w.ymax] {
            let x = -(b * y + c) / a;
            if x >= w.xmin - eps && x <= w.xmax + eps {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    pts.dedup_by(|p, q| (p.0 - q.0).abs() <= eps && (p.1 - q.1).abs() <= eps);
    match pts.len() {
        0 | 1 => None,
        _ => Some((pts[0], pts[pts.len() - 1])),
    }
}

/// Draws the real picture of the affine chart `z = 1`. `classes[i]` picks a
/// palette color for line `i`.
pub fn render_svg(a: &Arrangement, w: &Window, classes: Option<&[usize]>) -> String {
    let px = |x: f64| (x - w.xmin) / (w.xmax - w.xmin) * w.width as f64;
    let py = |y: f64| (w.ymax - y) / (w.ymax - w.ymin) * w.height as f64;
    let mut out = String::new();
    let legend_h = 24;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w.width,
        w.height + legend_h,
        w.width,
        w.height + legend_h
    )
    .unwrap();
    writeln!(out, r#"<title>{}</title>"#, escape(a.name())).unwrap();
    writeln!(out, r##"<rect x="0" y="0" width="{}" height="{}" fill="white" stroke="#999999"/>"##, w.width, w.height)
        .unwrap();
    let mut at_infinity = Vec::new();
    for (i, line) in a.lines().iter().enumerate() {
        let color = classes.and_then(|c| c.get(i)).map_or(PLAIN, |&k| PALETTE[k % PALETTE.len()]);
        if line.is_line_at_infinity() {
            at_infinity.push((i, color));
            continue;
        }
        let [ca, cb, cc] = line.covector.clone().map(|v| to_f64(&embed_real(&v, 64)));
        let Some(((x0, y0), (x1, y1))) = clip(ca, cb, cc, w) else { continue };
        writeln!(
            out,
            r#"<line id="line-{i}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="1.5"/>"#,
            px(x0),
            py(y0),
            px(x1),
            py(y1)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text id="label-{i}" x="{:.3}" y="{:.3}" font-size="12" fill="{color}">{}</text>"#,
            px(x0) + 3.0,
            py(y0) - 3.0,
            escape(&line.label)
        )
        .unwrap();
    }
    let mut legend = String::new();
    for (i, color) in &at_infinity {
        let _ = write!(legend, r#"<tspan id="label-{i}" fill="{color}">{} </tspan>"#, escape(&a.line(*i).label));
    }
    if !at_infinity.is_empty() {
        writeln!(
            out,
            r#"<text id="legend" x="4" y="{}" font-size="12">line at infinity: {legend}</text>"#,
            w.height + 16
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_in_box() {
        let t = Arrangement::from_forms("t", &[("a", "x"), ("b", "y"), ("c", "x + y - z")]).unwrap();
        let w = Window { xmin: -2.0, xmax: 2.0, ymin: -2.0, ymax: 2.0, width: 400, height: 400 };
        let svg = render_svg(&t, &w, None);
        assert_eq!(svg.matches("<line ").count(), 3);
        assert_eq!(svg, render_svg(&t, &w, None));
    }

    #[test]
    fn line_at_infinity_goes_to_legend() {
        let t = Arrangement::from_forms("t", &[("a", "x"), ("inf", "z")]).unwrap();
        let svg = render_svg(&t, &Window::square(2.0), Some(&[0, 1]));
        assert_eq!(svg.matches("<line ").count(), 1);
        assert!(svg.contains("line at infinity"));
        assert!(svg.contains(r#"id="label-1""#));
    }

    #[test]
    fn clipping() {
        let w = Window::square(1.0);
        assert_eq!(clip(1.0, 0.0, -0.5, &w), Some(((0.5, -1.0), (0.5, 1.0))));
        assert_eq!(clip(1.0, 0.0, -5.0, &w), None);
        // through a corner only
        assert_eq!(clip(1.0, 1.0, -2.0, &w), None);
    }
}
