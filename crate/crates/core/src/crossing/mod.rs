//! The crossing system: for a cycle through `(x, 0)` and `(0, y)` both first
//! integrals must take equal values at the two points.

pub mod appendix;
pub mod grid;
pub mod solve;

pub use appendix::{appendix_p, printed_n1_crossing};
pub use grid::grid_scan;
pub use solve::{count_report, solve_crossing, solve_crossing_with, CountReport, CrossingSolution, SolveOptions, SolveReport};

use thiserror::Error;

use crate::families::{FamilyError, PiecewiseSystem, SystemSource};
use crate::poly::{BiPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CrossingError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("degenerate crossing polynomial: {0} vanishes identically")]
    Degenerate(&'static str),
    #[error("non-isolated solution curve: the crossing polynomials share a common component")]
    NonIsolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Generated,
    Appendix,
    Explicit,
}

/// `PL(x,y) = H_L(x,0) − H_L(0,y)` and `Pi(x,y) = H_i(x,0) − H_i(0,y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingPolys {
    pub pl: BiPoly,
    pub pi: BiPoly,
    pub provenance: Provenance,
}

/// `H(x,0) − H(0,y)`.
pub fn axis_difference(h: &BiPoly) -> BiPoly {
    BiPoly::separable(&h.on_x_axis(), &h.on_y_axis())
}

impl CrossingPolys {
    pub fn new(pl: BiPoly, pi: BiPoly, provenance: Provenance) -> Result<Self, CrossingError> {
        if pl.is_zero() {
            return Err(CrossingError::Degenerate("PL"));
        }
        if pi.is_zero() {
            return Err(CrossingError::Degenerate("Pi"));
        }
        Ok(CrossingPolys { pl, pi, provenance })
    }
}

pub fn build_crossing_polys(sys: &PiecewiseSystem) -> Result<CrossingPolys, CrossingError> {
    let provenance = match sys.source {
        SystemSource::Params { .. } => Provenance::Generated,
        SystemSource::Explicit => Provenance::Explicit,
    };
    CrossingPolys::new(axis_difference(&sys.center.integral.h), axis_difference(&sys.saddle.integral.h), provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{AffineMap, LinearCenterParams, SaddleFamily, SaddleParams};
    use crate::poly::{parse_poly, q, qi, Env};

    fn n1_sys(a: i64, b: i64) -> PiecewiseSystem {
        PiecewiseSystem::from_params(
            LinearCenterParams::circle(),
            SaddleFamily::N1,
            SaddleParams::new(qi(a), qi(b), qi(0), qi(0)),
            AffineMap::identity(),
        )
        .unwrap()
    }

    #[test]
    fn circle_and_identity_n1() {
        let cp = build_crossing_polys(&n1_sys(0, -1)).unwrap();
        let env = Env::new();
        assert_eq!(cp.pl, parse_poly("x^2 - y^2", &env).unwrap());
        assert_eq!(cp.pi, parse_poly("-x^4/4 + y^2/2", &env).unwrap());
        assert!(cp.pl.is_separable() && cp.pi.is_separable());
        assert_eq!(cp.pl.coeff(0, 0), qi(0));
        assert_eq!(cp.pi.coeff(0, 0), qi(0));
        assert_eq!(cp.provenance, Provenance::Generated);
    }

    #[test]
    fn closed_form_n1_matches_at_zero_a() {
        // with a = 0 the printed and corrected normal forms coincide
        let prm = SaddleParams::new(qi(0), qi(-1), qi(0), qi(0));
        let cp = build_crossing_polys(&n1_sys(0, -1)).unwrap();
        assert_eq!(appendix_p(SaddleFamily::N1, &prm, &AffineMap::identity()).unwrap(), cp.pi);
    }

    #[test]
    fn closed_form_n1_literal_value() {
        let prm = SaddleParams::new(qi(1), qi(-1), qi(0), qi(0));
        let p1 = appendix_p(SaddleFamily::N1, &prm, &AffineMap::identity()).unwrap();
        assert_eq!(p1.eval_exact(&qi(1), &qi(1)), q(-1, 4));
        assert_eq!(p1, printed_n1_crossing(&prm));
    }

    #[test]
    fn closed_form_without_a1_b1_only_uses_the_v_map() {
        let prm = SaddleParams::new(qi(0), qi(0), q(-1, 2), qi(0));
        let aff = AffineMap { a1: qi(0), b1: qi(0), c1: qi(0), alpha1: qi(1), beta1: qi(2), gamma1: qi(0) };
        // singular map: rejected
        assert!(appendix_p(SaddleFamily::N31, &prm, &aff).is_err());
        let aff = AffineMap { a1: qi(0), b1: qi(1), c1: qi(0), alpha1: qi(1), beta1: qi(0), gamma1: q(1, 3) };
        let p3 = appendix_p(SaddleFamily::N31, &prm, &aff).unwrap();
        let generated = axis_difference(&crate::families::saddle_integral(SaddleFamily::N31, &prm, &aff).unwrap());
        assert_eq!(p3, generated);
    }

    #[test]
    fn degenerate_integral_is_rejected() {
        let h = parse_poly("x*y", &Env::new()).unwrap();
        assert!(axis_difference(&h).is_zero());
        assert_eq!(
            CrossingPolys::new(axis_difference(&parse_poly("x^2", &Env::new()).unwrap()), axis_difference(&h), Provenance::Explicit),
            Err(CrossingError::Degenerate("Pi"))
        );
    }
}
