//! Minimal SVG phase portraits of the verified cycles.

use std::fmt::Write as _;

use crate::orbits::BBox;

const PANEL: f64 = 480.0;
const GAP: f64 = 24.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

type P = [f64; 2];

/// Square window around `b` with a 5% margin on every side.
fn window(b: &BBox) -> BBox {
    let (cx, cy) = (0.5 * (b.min[0] + b.max[0]), 0.5 * (b.min[1] + b.max[1]));
    let half = 0.5 * (b.max[0] - b.min[0]).max(b.max[1] - b.min[1]).max(1e-12) * 1.1;
    BBox { min: [cx - half, cy - half], max: [cx + half, cy + half] }
}

struct Panel {
    view: BBox,
    left: f64,
}

impl Panel {
    fn map(&self, p: P) -> (f64, f64) {
        let s = PANEL / (self.view.max[0] - self.view.min[0]);
        (self.left + (p[0] - self.view.min[0]) * s, (self.view.max[1] - p[1]) * s)
    }

    fn draw(&self, out: &mut String, id: usize, polys: &[Vec<P>]) {
        let _ = writeln!(out, r#"  <clipPath id="clip{id}"><rect x="{:.2}" y="0" width="{PANEL}" height="{PANEL}"/></clipPath>"#, self.left);
        let _ = writeln!(out, r#"  <g clip-path="url(#clip{id})">"#);
        let _ = writeln!(
            out,
            r##"    <rect x="{:.2}" y="0" width="{PANEL}" height="{PANEL}" fill="#ffffff" stroke="#999999"/>"##,
            self.left
        );
        let (v0, v1) = (self.view.min, self.view.max);
        // full coordinate axes, then the switching line on top
        let (ax0, ay) = self.map([v0[0], 0.0]);
        let (ax1, _) = self.map([v1[0], 0.0]);
        let (ox, oy) = self.map([0.0, 0.0]);
        let (_, by0) = self.map([0.0, v0[1]]);
        let (_, by1) = self.map([0.0, v1[1]]);
        let _ = writeln!(out, r##"    <line x1="{ax0:.2}" y1="{ay:.2}" x2="{ax1:.2}" y2="{ay:.2}" stroke="#bbbbbb" stroke-width="0.8"/>"##);
        let _ = writeln!(out, r##"    <line x1="{ox:.2}" y1="{by0:.2}" x2="{ox:.2}" y2="{by1:.2}" stroke="#bbbbbb" stroke-width="0.8"/>"##);
        if v1[0] > 0.0 && v1[1] > 0.0 {
            let _ = writeln!(
                out,
                r##"    <polyline points="{ax1:.2},{oy:.2} {ox:.2},{oy:.2} {ox:.2},{by1:.2}" fill="none" stroke="#222222" stroke-width="2.2"/>"##
            );
        }
        for (k, poly) in polys.iter().enumerate() {
            let color = PALETTE[k % PALETTE.len()];
            let mut pts = String::new();
            let mut last: Option<(f64, f64)> = None;
            for (i, &p) in poly.iter().enumerate() {
                let q = self.map(p);
                let keep = i + 1 == poly.len() || last.is_none_or(|l| (q.0 - l.0).hypot(q.1 - l.1) >= 0.25);
                if keep {
                    let _ = write!(pts, "{:.2},{:.2} ", q.0, q.1);
                    last = Some(q);
                }
            }
            let _ = writeln!(out, r#"    <polyline points="{}" fill="none" stroke="{color}" stroke-width="1.4"/>"#, pts.trim_end());
        }
        let _ = writeln!(out, "  </g>");
    }
}

/// Renders the cycles with the switching line. With `zoom`, a second panel
/// shows the small cycles near the origin. Returns `None` for no cycles.
pub fn render_svg(title: &str, polys: &[Vec<P>], zoom: bool) -> Option<String> {
    let boxes: Vec<BBox> = polys.iter().filter_map(|p| BBox::of(p.iter())).collect();
    let all = boxes.iter().copied().reduce(|a, b| a.union(&b))?;
    let mut panels = vec![Panel { view: window(&all), left: 0.0 }];
    if zoom {
        let largest = boxes.iter().map(BBox::diagonal).fold(0.0, f64::max);
        let small = boxes.iter().filter(|b| b.diagonal() <= 0.25 * largest).copied().reduce(|a, b| a.union(&b));
        let inner = small.unwrap_or_else(|| {
            *boxes.iter().min_by(|a, b| a.diagonal().total_cmp(&b.diagonal())).expect("at least one cycle")
        });
        let with_origin = inner.union(&BBox { min: [0.0, 0.0], max: [0.0, 0.0] });
        panels.push(Panel { view: window(&with_origin), left: PANEL + GAP });
    }
    let width = panels.len() as f64 * PANEL + (panels.len() - 1) as f64 * GAP;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{h}" viewBox="0 0 {width} {h}">"#,
        h = PANEL + 28.0
    );
    let esc = title.replace('&', "&amp;").replace('<', "&lt;");
    let _ = writeln!(out, r#"  <title>{esc}</title>"#);
    for (i, p) in panels.iter().enumerate() {
        p.draw(&mut out, i, polys);
        let label = if i == 0 { format!("{esc}: {} cycles", polys.len()) } else { "zoom near the origin".into() };
        let _ = writeln!(
            out,
            r##"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" fill="#333333">{label}</text>"##,
            p.left + 4.0,
            PANEL + 20.0
        );
    }
    out.push_str("</svg>\n");
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(r: f64) -> Vec<P> {
        vec![[r, 0.0], [0.0, r], [-r, 0.0], [0.0, -r], [r, 0.0]]
    }

    #[test]
    fn empty_input_draws_nothing() {
        assert!(render_svg("x", &[], false).is_none());
    }

    #[test]
    fn one_polyline_per_cycle_and_zoom_panel() {
        let polys = vec![square(0.1), square(0.2), square(5.0)];
        let svg = render_svg("N31", &polys, false).unwrap();
        // three cycles plus the switching line
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(svg.contains(PALETTE[2]));
        let zoomed = render_svg("N31", &polys, true).unwrap();
        assert_eq!(zoomed.matches("<clipPath").count(), 2);
        assert!(zoomed.contains("zoom near the origin"));
    }

    #[test]
    fn window_has_margin() {
        let w = window(&BBox { min: [-1.0, -1.0], max: [1.0, 1.0] });
        assert!((w.max[0] - 1.1).abs() < 1e-12 && (w.min[1] + 1.1).abs() < 1e-12);
    }
}
