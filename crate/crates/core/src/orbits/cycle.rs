use serde::Serialize;

use super::arc::{entering_orientation, integrate_to_axis, ArcOptions, ArcResult, Axis, Region};
use super::geometry::bounding_diameter;
use super::OrbitError;
use crate::crossing::CrossingSolution;
use crate::families::{PiecewiseSystem, Subsystem};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Closure error relative to the cycle diameter.
    pub closure_tol: f64,
    /// Allowed penetration into the wrong region.
    pub region_tol: f64,
    /// Overrides the integrator settings derived from the cycle size.
    pub arc: Option<ArcOptions>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { closure_tol: 1e-5, region_tol: 1e-7, arc: None }
    }
}

/// Outcome of integrating both halves of a candidate cycle.
#[derive(Debug, Clone, Serialize)]
pub struct CycleVerification {
    pub x: f64,
    pub y: f64,
    /// Endpoint mismatch divided by the bounding-box diameter.
    pub closure_residual: f64,
    pub h_drift: f64,
    pub region_violation: f64,
    pub diameter: f64,
    /// Both halves traverse the loop in the same time direction.
    pub orientation_consistent: bool,
    pub verified: bool,
    pub diagnostic: Option<String>,
    /// Arc in the first quadrant.
    pub saddle: Option<ArcResult>,
    /// Arc in the complement.
    pub center: Option<ArcResult>,
}

impl CycleVerification {
    fn failed(sol: &CrossingSolution, why: String) -> Self {
        CycleVerification {
            x: sol.x,
            y: sol.y,
            closure_residual: f64::INFINITY,
            h_drift: f64::NAN,
            region_violation: f64::NAN,
            diameter: sol.x.hypot(sol.y),
            orientation_consistent: false,
            verified: false,
            diagnostic: Some(why),
            saddle: None,
            center: None,
        }
    }
}

struct Closed {
    saddle: ArcResult,
    center: ArcResult,
}

fn half(sub: &Subsystem, start: [f64; 2], region: Region, opts: &ArcOptions) -> Result<ArcResult, OrbitError> {
    let o = entering_orientation(&sub.field, start, region, opts)?;
    integrate_to_axis(&sub.field, &sub.integral, start, region, o, opts)
}

fn axis_mismatch(arc: &ArcResult, want: Axis) -> Result<(), OrbitError> {
    if arc.end_axis == want {
        Ok(())
    } else {
        Err(OrbitError::WrongAxis { x: arc.end[0], y: arc.end[1] })
    }
}

/// Saddle half from `a` to `b`, then center half from `b` back to `a`.
fn close_loop(sys: &PiecewiseSystem, a: [f64; 2], b: [f64; 2], want_b: Axis, want_a: Axis, opts: &ArcOptions) -> Result<Closed, OrbitError> {
    let saddle = half(&sys.saddle, a, Region::SigmaPlus, opts)?;
    axis_mismatch(&saddle, want_b)?;
    let center = half(&sys.center, b, Region::SigmaMinus, opts)?;
    axis_mismatch(&center, want_a)?;
    Ok(Closed { saddle, center })
}

pub fn verify_cycle(sys: &PiecewiseSystem, sol: &CrossingSolution) -> CycleVerification {
    verify_cycle_with(sys, sol, &VerifyOptions::default())
}

/// Integrates the saddle from `(x, 0)` and the center from `(0, y)` and
/// checks that the two halves close up without leaving their regions.
/// If the first attempt fails the start points are swapped.
pub fn verify_cycle_with(sys: &PiecewiseSystem, sol: &CrossingSolution, opts: &VerifyOptions) -> CycleVerification {
    if !sol.simple {
        return CycleVerification::failed(sol, "non-transversal crossing: tangential or multiple solution".into());
    }
    if !(sol.x > 0.0 && sol.y > 0.0) {
        return CycleVerification::failed(sol, format!("{}", OrbitError::Corner));
    }
    let p = [sol.x, 0.0];
    let q = [0.0, sol.y];
    let arc_opts = opts.arc.unwrap_or_else(|| ArcOptions::for_diameter(sol.x.hypot(sol.y)));

    let closed = close_loop(sys, p, q, Axis::PositiveY, Axis::PositiveX, &arc_opts).or_else(|first| {
        close_loop(sys, q, p, Axis::PositiveX, Axis::PositiveY, &arc_opts).map_err(|_| first)
    });
    let Closed { saddle, center } = match closed {
        Ok(c) => c,
        Err(e) => return CycleVerification::failed(sol, e.to_string()),
    };

    let diameter = bounding_diameter(saddle.polyline.iter().chain(center.polyline.iter()));
    let gap = |u: [f64; 2], v: [f64; 2]| (u[0] - v[0]).hypot(u[1] - v[1]);
    let closure_residual = gap(saddle.end, center.start).max(gap(center.end, saddle.start)) / diameter;
    let region_violation = saddle.region_violation.max(center.region_violation);
    let h_drift = saddle.h_drift.max(center.h_drift);

    let mut diagnostic = None;
    if !(closure_residual <= opts.closure_tol) {
        diagnostic = Some(format!("orbit does not close: residual {closure_residual:.3e}"));
    } else if !(region_violation <= opts.region_tol) {
        diagnostic = Some(format!("orbit leaves its region by {region_violation:.3e}"));
    }
    CycleVerification {
        x: sol.x,
        y: sol.y,
        closure_residual,
        h_drift,
        region_violation,
        diameter,
        orientation_consistent: saddle.orientation == center.orientation,
        verified: diagnostic.is_none(),
        diagnostic,
        saddle: Some(saddle),
        center: Some(center),
    }
}

/// Closed polyline of a verified cycle: the saddle half followed by the
/// center half, each crossing point appearing once, with the first point
/// repeated at the end.
pub fn emit_polyline(v: &CycleVerification) -> Result<Vec<[f64; 2]>, OrbitError> {
    let (Some(s), Some(c), true) = (v.saddle.as_ref(), v.center.as_ref(), v.verified) else {
        return Err(OrbitError::Unverified);
    };
    let mut out = Vec::with_capacity(s.polyline.len() + c.polyline.len());
    out.extend_from_slice(&s.polyline[..s.polyline.len() - 1]);
    out.extend_from_slice(&c.polyline[..c.polyline.len() - 1]);
    out.push(s.polyline[0]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{AffineMap, LinearCenterParams, SaddleFamily, SaddleParams};
    use crate::poly::{q, qi};

    fn sol(x: f64, y: f64) -> CrossingSolution {
        CrossingSolution { x, y, residual_pl: 0.0, residual_pi: 0.0, jacobian_det: 1.0, simple: true, multiplicity: 1 }
    }

    fn n1(a: i64, b: (i64, i64)) -> PiecewiseSystem {
        PiecewiseSystem::from_params(
            LinearCenterParams::circle(),
            SaddleFamily::N1,
            SaddleParams::new(qi(a), q(b.0, b.1), qi(0), qi(0)),
            AffineMap::identity(),
        )
        .unwrap()
    }

    #[test]
    fn non_simple_solution_is_not_verified() {
        let mut s = sol(1.0, 1.0);
        s.simple = false;
        let v = verify_cycle(&n1(0, (-1, 1)), &s);
        assert!(!v.verified);
        assert!(v.diagnostic.unwrap().contains("non-transversal crossing"));
    }

    #[test]
    fn center_half_of_the_circle_closes() {
        let sys = n1(0, (-1, 1));
        let opts = ArcOptions::for_diameter(2.0);
        let c = half(&sys.center, [0.0, 0.7], Region::SigmaMinus, &opts).unwrap();
        assert_eq!(c.end_axis, Axis::PositiveX);
        assert!((c.end[0] - 0.7).abs() < 1e-10);
        // the circle turns through three quadrants
        assert!((c.length - 1.5 * std::f64::consts::PI * 0.7).abs() < 1e-3);
    }

    #[test]
    fn circular_toy_cycle_closes() {
        use crate::families::PolyField;
        use crate::poly::{parse_poly, Env};
        let env = Env::new();
        let p = |s: &str| parse_poly(s, &env).unwrap();
        let rot = || Subsystem::new(PolyField::new(p("-y"), p("x")), p("x^2 + y^2"));
        let sys = PiecewiseSystem::explicit(rot(), rot()).unwrap();
        let v = verify_cycle(&sys, &sol(0.8, 0.8));
        assert!(v.verified, "{:?}", v.diagnostic);
        assert!(v.orientation_consistent);
        assert!((v.diameter - 1.6 * 2f64.sqrt()).abs() < 1e-3);
        let poly = emit_polyline(&v).unwrap();
        let (a, b) = (poly[0], *poly.last().unwrap());
        assert!((a[0] - b[0]).hypot(a[1] - b[1]) <= 1e-9);
        let q = v.center.as_ref().unwrap().start;
        assert_eq!(poly.iter().filter(|&&pt| pt == q).count(), 1);
        assert!(poly.iter().all(|pt| (pt[0].hypot(pt[1]) - 0.8).abs() < 1e-9));
    }

    #[test]
    fn unverified_cycle_has_no_polyline() {
        let mut s = sol(1.0, 1.0);
        s.simple = false;
        let v = verify_cycle(&n1(0, (-1, 1)), &s);
        assert_eq!(emit_polyline(&v), Err(OrbitError::Unverified));
    }
}
