//! Complete solver for the crossing system on the open positive quadrant.
//!
//! Pipeline: eliminate `x` with a resultant, isolate its positive roots in
//! `y`, back-substitute into `PL` (at most quadratic in `x`), filter against
//! `Pi`, polish with two-dimensional Newton, deduplicate.

use serde::Serialize;

use super::{CrossingError, CrossingPolys};
use crate::poly::{isolate_real_roots, refine_root, resultant_x, BiPoly, UniPoly, Var};

/// Upper bound on isolated complex solutions of a degree 2 × degree 4 system.
pub const BEZOUT_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingSolution {
    pub x: f64,
    pub y: f64,
    /// Absolute values `|PL(x,y)|` and `|Pi(x,y)|` after polishing.
    pub residual_pl: f64,
    pub residual_pi: f64,
    pub jacobian_det: f64,
    pub simple: bool,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Relative tolerance for spurious-root rejection and simplicity.
    pub tol: f64,
    /// Overrides the Cauchy bound as upper end of the `y` search interval.
    pub y_max: Option<f64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { tol: 1e-9, y_max: None }
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    /// Strictly positive solutions sorted by `x`.
    pub solutions: Vec<CrossingSolution>,
    /// Common zeros on the positive half-axes other than the origin.
    pub boundary: Vec<(f64, f64)>,
    pub resultant: UniPoly,
    pub y_max: f64,
}

impl SolveReport {
    pub fn resultant_degree(&self) -> usize {
        self.resultant.degree()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub bezout_bound: usize,
    pub resultant_degree: usize,
    pub admissible_count: usize,
}

const DEDUP_RADIUS: f64 = 1e-9;

pub fn solve_crossing(cp: &CrossingPolys, tol: f64) -> Result<Vec<CrossingSolution>, CrossingError> {
    Ok(solve_crossing_with(cp, &SolveOptions { tol, ..SolveOptions::default() })?.solutions)
}

pub fn count_report(cp: &CrossingPolys) -> Result<CountReport, CrossingError> {
    let rep = solve_crossing_with(cp, &SolveOptions::default())?;
    Ok(CountReport {
        bezout_bound: BEZOUT_BOUND,
        resultant_degree: rep.resultant_degree(),
        admissible_count: rep.solutions.len(),
    })
}

struct Jacobian {
    pl_x: BiPoly,
    pl_y: BiPoly,
    pi_x: BiPoly,
    pi_y: BiPoly,
}

impl Jacobian {
    fn new(cp: &CrossingPolys) -> Self {
        Jacobian {
            pl_x: cp.pl.partial(Var::X),
            pl_y: cp.pl.partial(Var::Y),
            pi_x: cp.pi.partial(Var::X),
            pi_y: cp.pi.partial(Var::Y),
        }
    }

    fn at(&self, x: f64, y: f64) -> [[f64; 2]; 2] {
        [[self.pl_x.eval(x, y), self.pl_y.eval(x, y)], [self.pi_x.eval(x, y), self.pi_y.eval(x, y)]]
    }
}

/// Residual of `p` at a point relative to its largest monomial.
fn scaled_residual(p: &BiPoly, x: f64, y: f64) -> f64 {
    p.eval(x, y).abs() / (1.0 + p.max_monomial(x, y))
}

/// Real roots of `c0 + c1·t + c2·t²`; a negative discriminant within
/// rounding of zero is treated as a double root.
fn real_roots_quadratic(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    if c2 == 0.0 {
        return if c1 == 0.0 { Vec::new() } else { vec![-c0 / c1] };
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let scale = c1 * c1 + (4.0 * c2 * c0).abs();
    if disc == 0.0 {
        return vec![-c1 / (2.0 * c2)];
    }
    if disc < 0.0 {
        if -disc <= 1e-9 * scale {
            return vec![-c1 / (2.0 * c2)];
        }
        return Vec::new();
    }
    let sq = disc.sqrt();
    let qv = -0.5 * (c1 + if c1 >= 0.0 { sq } else { -sq });
    let r1 = qv / c2;
    let r2 = if qv != 0.0 { c0 / qv } else { r1 };
    vec![r1, r2]
}

/// Candidate `x` values for a given `y₀`.
fn back_substitute(cp: &CrossingPolys, y0: f64) -> Result<Vec<f64>, CrossingError> {
    let pick = if (1..=2).contains(&cp.pl.degx()) { &cp.pl } else { &cp.pi };
    let coeffs: Vec<f64> = pick.x_coeffs_in_y().iter().map(|c| c.eval(y0)).collect();
    if coeffs.len() <= 3 {
        let c = |i: usize| coeffs.get(i).copied().unwrap_or(0.0);
        return Ok(real_roots_quadratic(c(0), c(1), c(2)));
    }
    // higher degree in x: isolate exactly on the rational image of y₀
    let u = pick.at_y(&crate::poly::rational::q_from_f64(y0));
    if u.is_zero() {
        return Ok(Vec::new());
    }
    let b = u.cauchy_bound();
    let mut out = Vec::new();
    for br in isolate_real_roots(&u, -b, b)? {
        out.push(refine_root(&u, &br, 1e-15 * b.max(1.0))?);
    }
    Ok(out)
}

fn newton_polish(cp: &CrossingPolys, jac: &Jacobian, mut x: f64, mut y: f64) -> (f64, f64) {
    for _ in 0..50 {
        let f = [cp.pl.eval(x, y), cp.pi.eval(x, y)];
        let j = jac.at(x, y);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dx = (f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let dy = (j[0][0] * f[1] - j[1][0] * f[0]) / det;
        let (nx, ny) = (x - dx, y - dy);
        if !nx.is_finite() || !ny.is_finite() {
            break;
        }
        let before = scaled_residual(&cp.pl, x, y) + scaled_residual(&cp.pi, x, y);
        let after = scaled_residual(&cp.pl, nx, ny) + scaled_residual(&cp.pi, nx, ny);
        if after > before {
            break;
        }
        x = nx;
        y = ny;
        if dx.abs() <= 1e-16 * x.abs().max(1.0) && dy.abs() <= 1e-16 * y.abs().max(1.0) {
            break;
        }
    }
    (x, y)
}

pub fn solve_crossing_with(cp: &CrossingPolys, opts: &SolveOptions) -> Result<SolveReport, CrossingError> {
    let tol = opts.tol;
    let resultant = resultant_x(&cp.pl, &cp.pi)?;
    if resultant.is_zero() {
        return Err(CrossingError::NonIsolated);
    }
    let y_max = opts.y_max.unwrap_or_else(|| 1.0 + resultant.cauchy_bound());
    let jac = Jacobian::new(cp);
    let brackets = isolate_real_roots(&resultant, 0.0, y_max)?;

    let mut found: Vec<(CrossingSolution, usize)> = Vec::new();
    let mut boundary = Vec::new();
    let accepts = |x: f64, y: f64| scaled_residual(&cp.pi, x, y) <= tol && scaled_residual(&cp.pl, x, y) <= tol;

    // common zeros on the positive x-axis
    for x in back_substitute(cp, 0.0)? {
        if x > 0.0 && accepts(x, 0.0) {
            boundary.push((x, 0.0));
        }
    }
    for br in &brackets {
        let y0 = refine_root(&resultant, br, 1e-14 * br.hi.max(1.0))?;
        let xs = back_substitute(cp, y0)?;
        let mut at_this_y = Vec::new();
        // every real common zero on this line, whatever the sign of x
        let mut share = 0;
        for x0 in xs {
            if !x0.is_finite() {
                continue;
            }
            if accepts(x0, y0) {
                share += 1;
            }
            let x_scale = 1e-12 * x0.abs().max(y0).max(1.0);
            if x0.abs() <= x_scale {
                if accepts(0.0, y0) {
                    boundary.push((0.0, y0));
                }
                continue;
            }
            if x0 < 0.0 || !accepts(x0, y0) {
                continue;
            }
            let (x, y) = newton_polish(cp, &jac, x0, y0);
            if x <= 0.0 || y <= 0.0 {
                continue;
            }
            at_this_y.push((x, y));
        }
        for (x, y) in at_this_y {
            let j = jac.at(x, y);
            let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
            let grad_scale = j[0][0].hypot(j[0][1]) * j[1][0].hypot(j[1][1]);
            // a resultant root of multiplicity k is spread over the common
            // zeros projecting onto it
            let multiplicity = (br.multiplicity / share.max(1)).max(1);
            let simple = det.abs() > tol * grad_scale && multiplicity == 1;
            let sol = CrossingSolution {
                x,
                y,
                residual_pl: cp.pl.eval(x, y).abs(),
                residual_pi: cp.pi.eval(x, y).abs(),
                jacobian_det: det,
                simple,
                multiplicity,
            };
            found.push((sol, br.multiplicity));
        }
    }

    let mut solutions: Vec<CrossingSolution> = Vec::new();
    found.sort_by(|a, b| a.0.x.total_cmp(&b.0.x));
    for (sol, _) in found {
        if solutions.iter().any(|s| (s.x - sol.x).abs() <= DEDUP_RADIUS && (s.y - sol.y).abs() <= DEDUP_RADIUS) {
            continue;
        }
        solutions.push(sol);
    }
    boundary.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    boundary.dedup_by(|a, b| (a.0 - b.0).abs() <= DEDUP_RADIUS && (a.1 - b.1).abs() <= DEDUP_RADIUS);
    Ok(SolveReport { solutions, boundary, resultant, y_max })
}

#[cfg(test)]
mod tests {
    use super::super::Provenance;
    use super::*;
    use crate::poly::{parse_poly, Env};

    fn cp(pl: &str, pi: &str) -> CrossingPolys {
        let env = Env::new();
        CrossingPolys::new(parse_poly(pl, &env).unwrap(), parse_poly(pi, &env).unwrap(), Provenance::Explicit).unwrap()
    }

    #[test]
    fn symmetric_system_has_one_positive_solution() {
        let sols = solve_crossing(&cp("x^2 - y^2", "x^4 + y^4 - 2"), 1e-9).unwrap();
        assert_eq!(sols.len(), 1);
        assert!((sols[0].x - 1.0).abs() < 1e-14 && (sols[0].y - 1.0).abs() < 1e-14);
        assert!(sols[0].simple);
    }

    #[test]
    fn common_component_is_an_error() {
        assert_eq!(solve_crossing(&cp("x^2 - y^2", "x^4 - y^4"), 1e-9), Err(CrossingError::NonIsolated));
    }

    #[test]
    fn quadratic_roots() {
        let mut r = real_roots_quadratic(2.0, -3.0, 1.0);
        r.sort_by(f64::total_cmp);
        assert_eq!(r, vec![1.0, 2.0]);
        assert_eq!(real_roots_quadratic(1.0, 0.0, 1.0), Vec::<f64>::new());
        assert_eq!(real_roots_quadratic(1.0, 2.0, 1.0 + 1e-17), vec![-1.0]);
        assert_eq!(real_roots_quadratic(-4.0, 0.0, 1.0).len(), 2);
    }

    #[test]
    fn tangential_solution_is_flagged() {
        // the line x = y touches the circle-like curve x^2 + (y-2)^2 = 2 at (1, 1)
        let sols = solve_crossing(&cp("x^2 - y^2", "x^2 + y^2 - 4*y + 2"), 1e-9).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(!sols[0].simple);
        assert_eq!(sols[0].multiplicity, 2);
    }

    #[test]
    fn axis_solutions_are_boundary() {
        // (3, 0) is a common zero on the positive x-axis
        let rep = solve_crossing_with(&cp("x^2 - 3*x - y", "x^4 - 27*x + y^3 - y"), &SolveOptions::default()).unwrap();
        assert!(rep.boundary.iter().any(|&(x, y)| (x - 3.0).abs() < 1e-12 && y == 0.0));
        assert!(rep.solutions.iter().all(|s| s.x > 0.0 && s.y > 0.0));
    }
}
