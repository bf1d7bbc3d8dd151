//! Static SVG figures. Coordinates are exact until this point and rounded
//! only when written.

use std::fmt::Write;

use tarkit_core::Drawing;

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Width and height of the picture in pixels.
    pub size: f64,
    pub labels: bool,
    /// Vertices drawn larger and in the given color.
    pub highlight: Vec<(usize, String)>,
    pub title: Option<String>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 600.0, labels: true, highlight: Vec::new(), title: None }
    }
}

/// Renders vertices, edges and crossing points. Crossings are marked with
/// small red squares. Fails only if the drawing is invalid.
pub fn render(d: &Drawing, opts: &SvgOptions) -> Result<String, tarkit_core::drawing::DrawingError> {
    let crossings = d.crossings()?;
    let pts: Vec<(f64, f64)> = d.positions().iter().map(|p| p.to_f64()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let margin = 20.0;
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let scale = (opts.size - 2.0 * margin) / span;
    let map = |(x, y): (f64, f64)| (margin + (x - x0) * scale, opts.size - margin - (y - y0) * scale);
    let r = (opts.size / 150.0).clamp(1.5, 4.0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        opts.size
    );
    if let Some(t) = &opts.title {
        let _ = writeln!(s, "  <title>{}</title>", escape(t));
    }
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"  <g stroke="black" stroke-width="1">"#);
    for &(a, b) in d.graph().edges() {
        let (ax, ay) = map(pts[a]);
        let (bx, by) = map(pts[b]);
        let _ = writeln!(s, r#"    <line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}"/>"#);
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r#"  <g fill="red">"#);
    for c in &crossings {
        let (cx, cy) = map(c.point.to_f64());
        let h = r * 0.8;
        let _ = writeln!(s, r#"    <rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#, cx - h, cy - h, 2.0 * h, 2.0 * h);
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r#"  <g fill="black">"#);
    for (v, &p) in pts.iter().enumerate() {
        let (cx, cy) = map(p);
        match opts.highlight.iter().find(|(w, _)| *w == v) {
            Some((_, color)) => {
                let _ = writeln!(s, r#"    <circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="{}"/>"#, 1.6 * r, escape(color));
            }
            None => {
                let _ = writeln!(s, r#"    <circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}"/>"#);
            }
        }
        if opts.labels {
            let _ = writeln!(
                s,
                r#"    <text x="{:.3}" y="{:.3}" font-size="{:.1}" fill="blue">{v}</text>"#,
                cx + r,
                cy - r,
                3.0 * r
            );
        }
    }
    let _ = writeln!(s, "  </g>\n</svg>");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_every_element() {
        let x = Drawing::from_ints(4, &[(0, 1), (2, 3)], &[(0, 0), (2, 2), (0, 2), (2, 0)]).unwrap();
        let s = render(&x, &SvgOptions::default()).unwrap();
        assert_eq!(s.matches("<line").count(), 2);
        assert_eq!(s.matches("<circle").count(), 4);
        assert_eq!(s.matches("<rect x=").count(), 1);
        assert_eq!(s, render(&x, &SvgOptions::default()).unwrap());
    }
}
