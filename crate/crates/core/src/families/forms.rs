//! First integrals and vector fields of the center and saddle families, as
//! exact polynomials.

use num_traits::{One, Zero};

use super::params::{validate, AffineMap, LinearCenterParams, SaddleFamily, SaddleParams};
use super::FamilyError;
use crate::poly::{q, qi, BiPoly, Q};

fn mono(c: Q, i: usize, j: usize) -> BiPoly {
    BiPoly::monomial(c, i, j)
}

fn sum(parts: &[BiPoly]) -> BiPoly {
    parts.iter().fold(BiPoly::zero(), |acc, p| &acc + p)
}

/// Quartic part of the saddle first integral in normal coordinates.
fn quartic(family: SaddleFamily, mu: &Q) -> BiPoly {
    use SaddleFamily::*;
    let m32 = q(-3, 2);
    match family {
        N1 => mono(q(-1, 4), 4, 0),
        N2 => mono(qi(-1), 3, 1),
        N31 | N32 => sum(&[mono(q(1, 4), 0, 4), mono(m32, 2, 2)]),
        N41 | N42 => sum(&[mono(q(-1, 4), 0, 4), mono(m32, 2, 2)]),
        N51 | N52 => sum(&[mono(q(1, 4), 0, 4), mono(q(-1, 4), 4, 0), mono(m32 * mu, 2, 2)]),
        N61 | N62 => sum(&[mono(q(-1, 4), 0, 4), mono(q(-1, 4), 4, 0), mono(m32 * mu, 2, 2)]),
    }
}

/// Saddle first integral in normal coordinates `(X, Y)`, written in `x, y`.
pub fn normal_form_integral(family: SaddleFamily, p: &SaddleParams) -> BiPoly {
    let quad = if family.is_c_subcase() {
        mono(-&p.c / qi(2), 2, 0)
    } else {
        sum(&[
            mono(&p.a * &p.a / (qi(2) * &p.b), 2, 0),
            mono(&p.b / qi(2), 0, 2),
            mono(p.a.clone(), 1, 1),
        ])
    };
    &quartic(family, &p.mu) + &quad
}

/// Saddle vector field in normal coordinates, transcribed term by term.
pub fn normal_form_field(family: SaddleFamily, p: &SaddleParams) -> (BiPoly, BiPoly) {
    use SaddleFamily::*;
    let (a, b, c, mu) = (&p.a, &p.b, &p.c, &p.mu);
    let lin_x = sum(&[mono(a.clone(), 1, 0), mono(b.clone(), 0, 1)]);
    match family {
        N1 => (lin_x, sum(&[mono(-(a * a) / b, 1, 0), mono(-a, 0, 1), mono(qi(1), 3, 0)])),
        N2 => (
            &lin_x - &mono(qi(1), 3, 0),
            sum(&[mono(-(a * a) / b, 1, 0), mono(-a, 0, 1), mono(qi(3), 2, 1)]),
        ),
        _ => {
            let (cross, pure_y, extra_x3) = match family {
                N31 | N32 => (qi(-3), qi(1), Q::zero()),
                N41 | N42 => (qi(-3), qi(-1), Q::zero()),
                N51 | N52 => (qi(-3) * mu, qi(1), Q::one()),
                _ => (qi(-3) * mu, qi(-1), Q::one()),
            };
            let xdot = sum(&[lin_x, mono(cross.clone(), 2, 1), mono(pure_y, 0, 3)]);
            let lin_coeff = c - a * a / (b + c);
            let ydot = sum(&[mono(lin_coeff, 1, 0), mono(-a, 0, 1), mono(extra_x3, 3, 0), mono(-cross, 1, 2)]);
            (xdot, ydot)
        }
    }
}

/// Saddle first integral after the affine substitution.
pub fn saddle_integral(family: SaddleFamily, p: &SaddleParams, affine: &AffineMap) -> Result<BiPoly, FamilyError> {
    validate(family, p, affine).map_err(FamilyError::Invalid)?;
    Ok(normal_form_integral(family, p).compose(&affine.u(), &affine.v()))
}

/// Saddle vector field after the affine substitution: the pull-back
/// `J⁻¹·F̃(u, v)` with `J` the linear part of the map.
pub fn saddle_field(
    family: SaddleFamily,
    p: &SaddleParams,
    affine: &AffineMap,
) -> Result<(BiPoly, BiPoly), FamilyError> {
    validate(family, p, affine).map_err(FamilyError::Invalid)?;
    let (fu, fv) = normal_form_field(family, p);
    let (u, v) = (affine.u(), affine.v());
    let (fu, fv) = (fu.compose(&u, &v), fv.compose(&u, &v));
    let inv = Q::one() / affine.det();
    let xdot = (&fu.scale(&affine.beta1) - &fv.scale(&affine.b1)).scale(&inv);
    let ydot = (&fv.scale(&affine.a1) - &fu.scale(&affine.alpha1)).scale(&inv);
    Ok((xdot, ydot))
}

/// `sign·[(A·y + x)² + 2(C·x − B·y) + ω²y²]`.
pub fn center_integral(p: &LinearCenterParams) -> BiPoly {
    let s = qi(p.sign as i64);
    let ayx = sum(&[mono(p.a.clone(), 0, 1), mono(qi(1), 1, 0)]);
    let h = sum(&[
        ayx.pow(2),
        mono(qi(2) * &p.c, 1, 0),
        mono(qi(-2) * &p.b, 0, 1),
        mono(&p.omega * &p.omega, 0, 2),
    ]);
    h.scale(&s)
}

/// `sign·(−(A²+ω²)y − A·x + B, A·y + x + C)`.
pub fn center_field(p: &LinearCenterParams) -> (BiPoly, BiPoly) {
    let s = qi(p.sign as i64);
    let xdot = sum(&[
        mono(-(&p.a * &p.a + &p.omega * &p.omega), 0, 1),
        mono(-&p.a, 1, 0),
        BiPoly::constant(p.b.clone()),
    ]);
    let ydot = sum(&[mono(p.a.clone(), 0, 1), mono(qi(1), 1, 0), BiPoly::constant(p.c.clone())]);
    (xdot.scale(&s), ydot.scale(&s))
}
