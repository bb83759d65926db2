//! Exact polynomial arithmetic, resultants and certified real-root isolation.

pub mod bi;
pub mod expr;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod uni;

pub use bi::{BiPoly, Var};
pub use expr::{parse_constant, parse_poly, Env};
pub use rational::{parse_rational, q, qi, Q};
pub use resultant::resultant_x;
pub use roots::{isolate_real_roots, refine_root, RootBracket};
pub use uni::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("nothing to eliminate: both polynomials are constant in x")]
    NothingToEliminate,
    #[error("zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: f64, hi: f64 },
    #[error("non-isolating bracket ({lo}, {hi}): no sign change")]
    NonIsolatingBracket { lo: f64, hi: f64 },
    #[error("roots near {0} cannot be separated in double precision")]
    Unresolvable(f64),
}
