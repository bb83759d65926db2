//! Brute-force cross-check for the crossing solver: scan a uniform grid for
//! cells where both polynomials change sign, then polish with Newton.

use super::CrossingPolys;
use crate::poly::{BiPoly, Var};

fn row_coeffs(p: &BiPoly, y: f64) -> Vec<f64> {
    p.x_coeffs_in_y().iter().map(|c| c.eval(y)).collect()
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// True when the four corner signs are not all equal and nonzero.
fn changes(s: [i8; 4]) -> bool {
    s.contains(&0) || s.iter().any(|&v| v != s[0])
}

/// Halvings applied to a candidate cell before Newton, so roots sharing a
/// grid cell with the origin or with each other get their own start point.
const SUBDIVISIONS: u32 = 8;

/// Positive common zeros in `(0, extent]²` found by scanning cells of size
/// `step` and running Newton from every cell crossed by both zero sets.
/// Candidate cells are subdivided and Newton also starts from each sub-cell
/// still crossed by both sets. Results closer than `merge` to each other are
/// merged, and those within `merge` of the origin are dropped; sorted by `x`.
pub fn grid_scan(cp: &CrossingPolys, extent: f64, step: f64, merge: f64) -> Vec<(f64, f64)> {
    let n = (extent / step).round() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 * step).collect();
    let eval_row = |y: f64| -> (Vec<i8>, Vec<i8>) {
        let (a, b) = (row_coeffs(&cp.pl, y), row_coeffs(&cp.pi, y));
        (xs.iter().map(|&x| sign(horner(&a, x))).collect(), xs.iter().map(|&x| sign(horner(&b, x))).collect())
    };
    let mut seeds = Vec::new();
    let mut prev = eval_row(0.0);
    for j in 1..=n {
        let cur = eval_row(xs[j]);
        for i in 0..n {
            let l = [prev.0[i], prev.0[i + 1], cur.0[i], cur.0[i + 1]];
            let p = [prev.1[i], prev.1[i + 1], cur.1[i], cur.1[i + 1]];
            if changes(l) && changes(p) {
                subdivide(cp, xs[i], xs[j - 1], step, SUBDIVISIONS, &mut seeds);
            }
        }
        prev = cur;
    }

    let d = [cp.pl.partial(Var::X), cp.pl.partial(Var::Y), cp.pi.partial(Var::X), cp.pi.partial(Var::Y)];
    let mut roots: Vec<(f64, f64)> = Vec::new();
    for (cx, cy, size) in seeds {
        let Some((x, y)) = newton(cp, &d, cx, cy) else { continue };
        // must converge near the cell that produced it
        if (x - cx).abs() > 2.0 * size || (y - cy).abs() > 2.0 * size {
            continue;
        }
        if x <= 0.0 || y <= 0.0 || x > extent || y > extent {
            continue;
        }
        // the origin is a common root of every system and never admissible
        if x.hypot(y) <= merge {
            continue;
        }
        if roots.iter().any(|r| (r.0 - x).abs() <= merge && (r.1 - y).abs() <= merge) {
            continue;
        }
        roots.push((x, y));
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    roots
}

/// Pushes the center of the cell `[x0, x0+size] × [y0, y0+size]`, then
/// recurses into the quarters whose corners show both zero sets.
fn subdivide(cp: &CrossingPolys, x0: f64, y0: f64, size: f64, depth: u32, out: &mut Vec<(f64, f64, f64)>) {
    out.push((x0 + 0.5 * size, y0 + 0.5 * size, size));
    if depth == 0 {
        return;
    }
    let h = 0.5 * size;
    for (sx, sy) in [(x0, y0), (x0 + h, y0), (x0, y0 + h), (x0 + h, y0 + h)] {
        let corners = [(sx, sy), (sx + h, sy), (sx, sy + h), (sx + h, sy + h)];
        let l = corners.map(|(x, y)| sign(cp.pl.eval(x, y)));
        let p = corners.map(|(x, y)| sign(cp.pi.eval(x, y)));
        if changes(l) && changes(p) {
            subdivide(cp, sx, sy, h, depth - 1, out);
        }
    }
}

fn newton(cp: &CrossingPolys, d: &[BiPoly; 4], mut x: f64, mut y: f64) -> Option<(f64, f64)> {
    for _ in 0..100 {
        let (f, g) = (cp.pl.eval(x, y), cp.pi.eval(x, y));
        let (a, b, c, e) = (d[0].eval(x, y), d[1].eval(x, y), d[2].eval(x, y), d[3].eval(x, y));
        let det = a * e - b * c;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dx = (f * e - g * b) / det;
        let dy = (a * g - c * f) / det;
        x -= dx;
        y -= dy;
        if dx.abs() + dy.abs() <= 1e-15 * (1.0 + x.abs() + y.abs()) {
            break;
        }
    }
    let scale = |p: &BiPoly| 1.0 + p.max_monomial(x, y);
    let ok = cp.pl.eval(x, y).abs() <= 1e-10 * scale(&cp.pl) && cp.pi.eval(x, y).abs() <= 1e-10 * scale(&cp.pi);
    ok.then_some((x, y))
}
