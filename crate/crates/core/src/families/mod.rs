//! The linear center and the nilpotent-saddle families: parameters,
//! validation, first integrals and vector fields.

pub mod forms;
pub mod params;
pub mod system;

pub use forms::{center_field, center_integral, normal_form_field, normal_form_integral, saddle_field, saddle_integral};
pub use params::{validate, AffineMap, LinearCenterParams, SaddleFamily, SaddleParams, Violation};
pub use system::{
    hamiltonian_residual, random_center, random_saddle, random_system, sample_points, FirstIntegral, Hamiltonian,
    PiecewiseSystem, PolyField, Subsystem, SystemSource, VectorField, GUARD_TOL,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("invalid parameters: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("{side} side fails the Hamiltonian check: normalized |∇H·F| = {residual:e}")]
    NotHamiltonian { side: &'static str, residual: f64 },
}
