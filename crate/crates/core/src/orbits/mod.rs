//! Numerical integration of the two halves of a crossing cycle.

pub mod arc;
pub mod cycle;
pub mod dopri;
pub mod geometry;

pub use arc::{entering_orientation, integrate_to_axis, ArcOptions, ArcResult, Axis, Orientation, Region, DRIFT_FACTOR};
pub use dopri::StepperOptions;
pub use cycle::{emit_polyline, verify_cycle, verify_cycle_with, CycleVerification, VerifyOptions};
pub use geometry::{bounding_diameter, pairwise_disjoint, polylines_intersect, segments_intersect, BBox};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OrbitError {
    #[error("non-transversal crossing at ({x}, {y}): the field is tangent to the switching line")]
    NonTransversal { x: f64, y: f64 },
    #[error("orbit through ({x}, {y}) leaves its region immediately")]
    LeavesRegion { x: f64, y: f64 },
    #[error("no return to the switching line within arc length {length:.3e}")]
    NoReturn { length: f64 },
    #[error("equilibrium at ({x}, {y})")]
    Equilibrium { x: f64, y: f64 },
    #[error("step size collapsed near ({x}, {y})")]
    StepCollapse { x: f64, y: f64 },
    #[error("orbit runs into the origin")]
    Corner,
    #[error("({x}, {y}) is not on the positive half-axes")]
    NotOnSigma { x: f64, y: f64 },
    #[error("orbit returns on the wrong half-axis at ({x}, {y})")]
    WrongAxis { x: f64, y: f64 },
    #[error("cycle was not verified")]
    Unverified,
}
