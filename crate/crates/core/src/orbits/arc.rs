//! Integration of one subsystem from a point of Σ until the orbit returns.

use serde::Serialize;

use super::dopri::{DenseStep, StepFailure, Stepper, StepperOptions};
use super::OrbitError;
use crate::families::{FirstIntegral, VectorField};

/// Side of Σ an arc lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// Open first quadrant, where the saddle acts.
    SigmaPlus,
    /// Complement of the closed first quadrant, where the center acts.
    SigmaMinus,
}

impl Region {
    /// Signed distance-like function: positive inside, negative outside.
    pub fn inside(self, p: [f64; 2]) -> f64 {
        let g = p[0].min(p[1]);
        match self {
            Region::SigmaPlus => g,
            Region::SigmaMinus => -g,
        }
    }
}

/// A half-axis of Σ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    PositiveX,
    PositiveY,
}

impl Axis {
    pub fn point(self, s: f64) -> [f64; 2] {
        match self {
            Axis::PositiveX => [s, 0.0],
            Axis::PositiveY => [0.0, s],
        }
    }

    /// Coordinate along the axis.
    pub fn coordinate(self, p: [f64; 2]) -> f64 {
        match self {
            Axis::PositiveX => p[0],
            Axis::PositiveY => p[1],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Forward,
    Backward,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Forward => 1.0,
            Orientation::Backward => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ArcOptions {
    pub stepper: StepperOptions,
    pub max_steps: usize,
    /// Arc-length budget before giving up.
    pub max_length: f64,
    /// Endpoints closer than this to the origin are rejected.
    pub corner_tol: f64,
    /// Relative threshold for the velocity component normal to Σ.
    pub transversal_tol: f64,
    /// Reruns with a tenfold tighter step tolerance allowed when the
    /// first-integral drift exceeds `DRIFT_FACTOR` times the requested one.
    pub drift_refinements: u32,
}

/// Target for `h_drift` as a multiple of the requested step tolerance.
pub const DRIFT_FACTOR: f64 = 100.0;

impl ArcOptions {
    /// Defaults scaled to a cycle of the given diameter.
    pub fn for_diameter(diameter: f64) -> Self {
        ArcOptions {
            stepper: StepperOptions { h_max: f64::INFINITY, ..StepperOptions::default() },
            max_steps: 10_000_000,
            max_length: 1e4 * diameter.max(1e-6),
            corner_tol: 1e-9,
            transversal_tol: 1e-9,
            drift_refinements: 2,
        }
    }
}

/// Result of integrating one subsystem across its region.
#[derive(Debug, Clone, Serialize)]
pub struct ArcResult {
    pub start: [f64; 2],
    /// Event location, snapped onto `end_axis`.
    pub end: [f64; 2],
    pub end_axis: Axis,
    /// Distance moved when snapping the event point onto the axis.
    pub snap: f64,
    pub orientation: Orientation,
    /// Step endpoints and dense-output samples, from `start` to `end`.
    pub polyline: Vec<[f64; 2]>,
    /// `max |H − H(start)| / (1 + |H(start)|)` along the arc.
    pub h_drift: f64,
    /// Deepest excursion outside the region before the event.
    pub region_violation: f64,
    pub length: f64,
    pub steps: usize,
    /// Step tolerance of the accepted pass; tighter than requested when
    /// drift refinement kicked in.
    pub step_tol: f64,
}

/// Axis through `p`, which must lie on Σ away from the origin.
fn axis_of(p: [f64; 2], corner_tol: f64) -> Result<Axis, OrbitError> {
    if p[0].hypot(p[1]) <= corner_tol {
        return Err(OrbitError::Corner);
    }
    if p[1] == 0.0 && p[0] > 0.0 {
        Ok(Axis::PositiveX)
    } else if p[0] == 0.0 && p[1] > 0.0 {
        Ok(Axis::PositiveY)
    } else {
        Err(OrbitError::NotOnSigma { x: p[0], y: p[1] })
    }
}

/// Velocity component entering `region` at a point of `axis`.
fn inward_component(v: (f64, f64), axis: Axis, region: Region) -> f64 {
    let n = match axis {
        Axis::PositiveX => v.1,
        Axis::PositiveY => v.0,
    };
    match region {
        Region::SigmaPlus => n,
        Region::SigmaMinus => -n,
    }
}

/// Orientation under which `field` enters `region` from `start`, if the
/// crossing is transversal.
pub fn entering_orientation(
    field: &dyn VectorField,
    start: [f64; 2],
    region: Region,
    opts: &ArcOptions,
) -> Result<Orientation, OrbitError> {
    let axis = axis_of(start, opts.corner_tol)?;
    let v = field.velocity(start[0], start[1]);
    let speed = v.0.hypot(v.1);
    if speed <= f64::EPSILON * (1.0 + start[0].hypot(start[1])) {
        return Err(OrbitError::Equilibrium { x: start[0], y: start[1] });
    }
    let n = inward_component(v, axis, region);
    if n.abs() <= opts.transversal_tol * speed.max(1.0) {
        return Err(OrbitError::NonTransversal { x: start[0], y: start[1] });
    }
    Ok(if n > 0.0 { Orientation::Forward } else { Orientation::Backward })
}

/// Locates the first point of the step where the orbit leaves `region`.
/// Returns the step fraction, or `None` if the step stays inside.
fn locate_exit(step: &DenseStep, region: Region) -> Option<f64> {
    const PROBES: [f64; 4] = [0.25, 0.5, 0.75, 1.0];
    let mut lo = 0.0;
    let mut hi = None;
    for &t in &PROBES {
        if region.inside(step.at(t)) < 0.0 {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let mut hi = hi?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if region.inside(step.at(mid)) < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Dense-output points per step in the emitted polyline, besides the step
/// end. They make long steps draw as curves.
const INTERIOR_SAMPLES: usize = 3;

/// Appends dense-output points strictly inside `[0, theta_end]` of `step`.
fn push_interior(step: &DenseStep, theta_end: f64, polyline: &mut Vec<[f64; 2]>, length: &mut f64) {
    for k in 1..=INTERIOR_SAMPLES {
        let p = step.at(theta_end * k as f64 / (INTERIOR_SAMPLES + 1) as f64);
        let prev = *polyline.last().expect("polyline starts non-empty");
        *length += (p[0] - prev[0]).hypot(p[1] - prev[1]);
        polyline.push(p);
    }
}

/// Integrates `field` from `start` ∈ Σ through `region` until the orbit
/// reaches Σ again, returning the arc.
///
/// The first-integral drift and the region penetration are measured at the
/// integrator's step points and the exit point; the polyline also carries
/// dense-output samples between steps. If the drift exceeds
/// [`DRIFT_FACTOR`] times the requested tolerance, the arc is recomputed with
/// tighter tolerances up to `opts.drift_refinements` times and the pass with
/// the smallest drift is returned.
pub fn integrate_to_axis(
    field: &dyn VectorField,
    integral: &dyn FirstIntegral,
    start: [f64; 2],
    region: Region,
    orientation: Orientation,
    opts: &ArcOptions,
) -> Result<ArcResult, OrbitError> {
    let target = DRIFT_FACTOR * opts.stepper.atol.max(opts.stepper.rtol);
    let mut pass = *opts;
    let mut best = integrate_once(field, integral, start, region, orientation, &pass)?;
    for _ in 0..opts.drift_refinements {
        if best.h_drift <= target {
            break;
        }
        pass.stepper.atol *= 0.1;
        pass.stepper.rtol *= 0.1;
        match integrate_once(field, integral, start, region, orientation, &pass) {
            Ok(arc) if arc.h_drift < best.h_drift => best = arc,
            _ => break,
        }
    }
    Ok(best)
}

fn integrate_once(
    field: &dyn VectorField,
    integral: &dyn FirstIntegral,
    start: [f64; 2],
    region: Region,
    orientation: Orientation,
    opts: &ArcOptions,
) -> Result<ArcResult, OrbitError> {
    let axis = axis_of(start, opts.corner_tol)?;
    let v = field.velocity(start[0], start[1]);
    let n = orientation.sign() * inward_component(v, axis, region);
    let speed = v.0.hypot(v.1);
    if speed <= f64::EPSILON * (1.0 + start[0].hypot(start[1])) {
        return Err(OrbitError::Equilibrium { x: start[0], y: start[1] });
    }
    if n.abs() <= opts.transversal_tol * speed.max(1.0) {
        return Err(OrbitError::NonTransversal { x: start[0], y: start[1] });
    }
    if n < 0.0 {
        return Err(OrbitError::LeavesRegion { x: start[0], y: start[1] });
    }

    let h0 = integral.value(start[0], start[1]);
    let drift = |p: [f64; 2]| (integral.value(p[0], p[1]) - h0).abs() / (1.0 + h0.abs());
    let mut stepper = Stepper::new(field, orientation.sign(), start, opts.stepper);
    let mut polyline = vec![start];
    let mut h_drift: f64 = 0.0;
    let mut violation: f64 = 0.0;
    let mut length = 0.0;

    for steps in 1..=opts.max_steps {
        let step = stepper.step().map_err(|e| match e {
            StepFailure::StepTooSmall | StepFailure::NonFinite => {
                let p = polyline.last().copied().unwrap_or(start);
                OrbitError::StepCollapse { x: p[0], y: p[1] }
            }
        })?;
        if let Some(theta) = locate_exit(&step, region) {
            let raw = step.at(theta);
            push_interior(&step, theta, &mut polyline, &mut length);
            let prev = *polyline.last().expect("polyline starts non-empty");
            length += (raw[0] - prev[0]).hypot(raw[1] - prev[1]);
            // the exit crosses whichever coordinate just went through zero
            let end_axis = if raw[0].abs() <= raw[1].abs() { Axis::PositiveY } else { Axis::PositiveX };
            let end = end_axis.point(end_axis.coordinate(raw));
            if end_axis.coordinate(end) <= opts.corner_tol {
                return Err(OrbitError::Corner);
            }
            let snap = (raw[0] - end[0]).hypot(raw[1] - end[1]);
            violation = violation.max((-region.inside(raw)).max(0.0));
            h_drift = h_drift.max(drift(end));
            polyline.push(end);
            return Ok(ArcResult {
                start,
                end,
                end_axis,
                snap,
                orientation,
                polyline,
                h_drift,
                region_violation: violation,
                length,
                steps,
                step_tol: opts.stepper.atol.max(opts.stepper.rtol),
            });
        }
        let p = step.end;
        push_interior(&step, 1.0, &mut polyline, &mut length);
        let prev = *polyline.last().expect("polyline starts non-empty");
        length += (p[0] - prev[0]).hypot(p[1] - prev[1]);
        violation = violation.max((-region.inside(p)).max(0.0));
        h_drift = h_drift.max(drift(p));
        polyline.push(p);
        if length > opts.max_length {
            return Err(OrbitError::NoReturn { length });
        }
    }
    Err(OrbitError::NoReturn { length })
}
