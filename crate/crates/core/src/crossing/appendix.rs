//! Closed-form crossing polynomials of the saddle families, transcribed
//! term by term in the original parameters. They serve as an independent
//! oracle for the polynomials generated by composition.

use super::CrossingError;
use crate::families::{validate, AffineMap, FamilyError, SaddleFamily, SaddleParams};
use crate::poly::{parse_constant, parse_poly, BiPoly, Env};

/// Normal-coordinate closed form for N1: `(2a·x² − b·x⁴ − 2b²·y²)/(4b)`.
const N1_CLOSED_FORM: (&str, &str) = ("1/(4*b)", "2*a*x^2 - b*x^4 - 2*b^2*y^2");


const N2_CLOSED_FORM: (&str, &str) = (
    "1/(2*b)",
    concat!(
        "2*a^2*a1*c1*x + a^2*a1^2*x^2 - 2*a^2*b1*c1*y - a^2*b1^2*y^2 + 2*a*b*c1*x*al - 2*b*c1^3*x*al",
        " + 2*a*a1*b*x^2*al - 6*a1*b*c1^2*x^2*al - 6*a1^2*b*c1*x^3*al - 2*a1^3*b*x^4*al + b^2*x^2*al^2",
        " - 2*a*b*c1*y*be + 2*b*c1^3*y*be - 2*a*b*b1*y^2*be + 6*b*b1*c1^2*y^2*be + 6*b*b1^2*c1*y^3*be",
        " + 2*b*b1^3*y^4*be - b^2*y^2*be^2 + 2*a*a1*b*x*ga - 6*a1*b*c1^2*x*ga - 6*a1^2*b*c1*x^2*ga",
        " - 2*a1^3*b*x^3*ga - 2*a*b*b1*y*ga + 6*b*b1*c1^2*y*ga + 6*b*b1^2*c1*y^2*ga + 2*b*b1^3*y^3*ga",
        " + 2*b^2*x*al*ga - 2*b^2*y*be*ga",
    ),
);

const N31_CLOSED_FORM: (&str, &str) = (
    "1/4",
    concat!(
        "-4*a1*c*c1*x - 2*a1^2*c*x^2 + 4*b1*c*c1*y + 2*b1^2*c*y^2 - 6*c1^2*x^2*al^2",
        " - 12*a1*c1*x^3*al^2 - 6*a1^2*x^4*al^2 + x^4*al^4 + 6*c1^2*y^2*be^2 + 12*b1*c1*y^3*be^2",
        " + 6*b1^2*y^4*be^2 - y^4*be^4 - 12*c1^2*x*al*ga - 24*a1*c1*x^2*al*ga - 12*a1^2*x^3*al*ga",
        " + 4*x^3*al^3*ga + 12*c1^2*y*be*ga + 24*b1*c1*y^2*be*ga + 12*b1^2*y^3*be*ga - 4*y^3*be^3*ga",
        " - 12*a1*c1*x*ga^2 - 6*a1^2*x^2*ga^2 + 12*b1*c1*y*ga^2 + 6*b1^2*y^2*ga^2 + 6*x^2*al^2*ga^2",
        " - 6*y^2*be^2*ga^2 + 4*x*al*ga^3 - 4*y*be*ga^3",
    ),
);

const N32_CLOSED_FORM: (&str, &str) = (
    "1/(4*b)",
    concat!(
        "4*a^2*a1*c1*x + 2*a^2*a1^2*x^2 - 4*a^2*b1*c1*y - 2*a^2*b1^2*y^2 + 4*a*b*c1*x*al",
        " + 4*a*a1*b*x^2*al + 2*b^2*x^2*al^2 - 6*b*c1^2*x^2*al^2 - 12*a1*b*c1*x^3*al^2",
        " - 6*a1^2*b*x^4*al^2 + b*x^4*al^4 - 4*a*b*c1*y*be - 4*a*b*b1*y^2*be - 2*b^2*y^2*be^2",
        " + 6*b*c1^2*y^2*be^2 + 12*b*b1*c1*y^3*be^2 + 6*b*b1^2*y^4*be^2 - b*y^4*be^4 + 4*a*a1*b*x*ga",
        " - 4*a*b*b1*y*ga + 4*b^2*x*al*ga - 12*b*c1^2*x*al*ga - 24*a1*b*c1*x^2*al*ga",
        " - 12*a1^2*b*x^3*al*ga + 4*b*x^3*al^3*ga - 4*b^2*y*be*ga + 12*b*c1^2*y*be*ga",
        " + 24*b*b1*c1*y^2*be*ga + 12*b*b1^2*y^3*be*ga - 4*b*y^3*be^3*ga - 12*a1*b*c1*x*ga^2",
        " - 6*a1^2*b*x^2*ga^2 + 12*b*b1*c1*y*ga^2 + 6*b*b1^2*y^2*ga^2 + 6*b*x^2*al^2*ga^2",
        " - 6*b*y^2*be^2*ga^2 + 4*b*x*al*ga^3 - 4*b*y*be*ga^3",
    ),
);

const N41_CLOSED_FORM: (&str, &str) = (
    "1/4",
    concat!(
        "-4*a1*c*c1*x - 2*a1^2*c*x^2 + 4*b1*c*c1*y + 2*b1^2*c*y^2 - 6*c1^2*x^2*al^2",
        " - 12*a1*c1*x^3*al^2 - 6*a1^2*x^4*al^2 - x^4*al^4 + 6*c1^2*y^2*be^2 + 12*b1*c1*y^3*be^2",
        " + 6*b1^2*y^4*be^2 + y^4*be^4 - 12*c1^2*x*al*ga - 24*a1*c1*x^2*al*ga - 12*a1^2*x^3*al*ga",
        " - 4*x^3*al^3*ga + 12*c1^2*y*be*ga + 24*b1*c1*y^2*be*ga + 12*b1^2*y^3*be*ga + 4*y^3*be^3*ga",
        " - 12*a1*c1*x*ga^2 - 6*a1^2*x^2*ga^2 + 12*b1*c1*y*ga^2 + 6*b1^2*y^2*ga^2 - 6*x^2*al^2*ga^2",
        " + 6*y^2*be^2*ga^2 - 4*x*al*ga^3 + 4*y*be*ga^3",
    ),
);

const N42_CLOSED_FORM: (&str, &str) = (
    "1/(4*b)",
    concat!(
        "4*a^2*a1*c1*x + 2*a^2*a1^2*x^2 - 4*a^2*b1*c1*y - 2*a^2*b1^2*y^2 + 4*a*b*c1*x*al",
        " + 4*a*a1*b*x^2*al + 2*b^2*x^2*al^2 - 6*b*c1^2*x^2*al^2 - 12*a1*b*c1*x^3*al^2",
        " - 6*a1^2*b*x^4*al^2 - b*x^4*al^4 - 4*a*b*c1*y*be - 4*a*b*b1*y^2*be - 2*b^2*y^2*be^2",
        " + 6*b*c1^2*y^2*be^2 + 12*b*b1*c1*y^3*be^2 + 6*b*b1^2*y^4*be^2 + b*y^4*be^4 + 4*a*a1*b*x*ga",
        " - 4*a*b*b1*y*ga + 4*b^2*x*al*ga - 12*b*c1^2*x*al*ga - 24*a1*b*c1*x^2*al*ga",
        " - 12*a1^2*b*x^3*al*ga - 4*b*x^3*al^3*ga - 4*b^2*y*be*ga + 12*b*c1^2*y*be*ga",
        " + 24*b*b1*c1*y^2*be*ga + 12*b*b1^2*y^3*be*ga + 4*b*y^3*be^3*ga - 12*a1*b*c1*x*ga^2",
        " - 6*a1^2*b*x^2*ga^2 + 12*b*b1*c1*y*ga^2 + 6*b*b1^2*y^2*ga^2 - 6*b*x^2*al^2*ga^2",
        " + 6*b*y^2*be^2*ga^2 - 4*b*x*al*ga^3 + 4*b*y*be*ga^3",
    ),
);

const N51_CLOSED_FORM: (&str, &str) = (
    "1/4",
    concat!(
        "-4*a1*c*c1*x - 4*a1*c1^3*x - 2*a1^2*c*x^2 - 6*a1^2*c1^2*x^2 - 4*a1^3*c1*x^3 - a1^4*x^4",
        " + 4*b1*c*c1*y + 4*b1*c1^3*y + 2*b1^2*c*y^2 + 6*b1^2*c1^2*y^2 + 4*b1^3*c1*y^3 + b1^4*y^4",
        " + x^4*al^4 - y^4*be^4 + 4*x^3*al^3*ga - 4*y^3*be^3*ga + 6*x^2*al^2*ga^2 - 6*y^2*be^2*ga^2",
        " + 4*x*al*ga^3 - 4*y*be*ga^3 - 6*c1^2*x^2*al^2*mu - 12*a1*c1*x^3*al^2*mu - 6*a1^2*x^4*al^2*mu",
        " + 6*c1^2*y^2*be^2*mu + 12*b1*c1*y^3*be^2*mu + 6*b1^2*y^4*be^2*mu - 12*c1^2*x*al*ga*mu",
        " - 24*a1*c1*x^2*al*ga*mu - 12*a1^2*x^3*al*ga*mu + 12*c1^2*y*be*ga*mu + 24*b1*c1*y^2*be*ga*mu",
        " + 12*b1^2*y^3*be*ga*mu - 12*a1*c1*x*ga^2*mu - 6*a1^2*x^2*ga^2*mu + 12*b1*c1*y*ga^2*mu",
        " + 6*b1^2*y^2*ga^2*mu",
    ),
);

const N52_CLOSED_FORM: (&str, &str) = (
    "1/(4*b)",
    concat!(
        "4*a^2*a1*c1*x - 4*a1*b*c1^3*x + 2*a^2*a1^2*x^2 - 6*a1^2*b*c1^2*x^2 - 4*a1^3*b*c1*x^3",
        " - a1^4*b*x^4 - 4*a^2*b1*c1*y + 4*b*b1*c1^3*y - 2*a^2*b1^2*y^2 + 6*b*b1^2*c1^2*y^2",
        " + 4*b*b1^3*c1*y^3 + b*b1^4*y^4 + 4*a*b*c1*x*al + 4*a*a1*b*x^2*al + 2*b^2*x^2*al^2",
        " + b*x^4*al^4 - 4*a*b*c1*y*be - 4*a*b*b1*y^2*be - 2*b^2*y^2*be^2 - b*y^4*be^4 + 4*a*a1*b*x*ga",
        " - 4*a*b*b1*y*ga + 4*b^2*x*al*ga + 4*b*x^3*al^3*ga - 4*b^2*y*be*ga - 4*b*y^3*be^3*ga",
        " + 6*b*x^2*al^2*ga^2 - 6*b*y^2*be^2*ga^2 + 4*b*x*al*ga^3 - 4*b*y*be*ga^3",
        " - 6*b*c1^2*x^2*al^2*mu - 12*a1*b*c1*x^3*al^2*mu - 6*a1^2*b*x^4*al^2*mu",
        " + 6*b*c1^2*y^2*be^2*mu + 12*b*b1*c1*y^3*be^2*mu + 6*b*b1^2*y^4*be^2*mu",
        " - 12*b*c1^2*x*al*ga*mu - 24*a1*b*c1*x^2*al*ga*mu - 12*a1^2*b*x^3*al*ga*mu",
        " + 12*b*c1^2*y*be*ga*mu + 24*b*b1*c1*y^2*be*ga*mu + 12*b*b1^2*y^3*be*ga*mu",
        " - 12*a1*b*c1*x*ga^2*mu - 6*a1^2*b*x^2*ga^2*mu + 12*b*b1*c1*y*ga^2*mu + 6*b*b1^2*y^2*ga^2*mu",
    ),
);

const N61_CLOSED_FORM: (&str, &str) = (
    "1/4",
    concat!(
        "-4*a1*c*c1*x - 4*a1*c1^3*x - 2*a1^2*c*x^2 - 6*a1^2*c1^2*x^2 - 4*a1^3*c1*x^3 - a1^4*x^4",
        " + 4*b1*c*c1*y + 4*b1*c1^3*y + 2*b1^2*c*y^2 + 6*b1^2*c1^2*y^2 + 4*b1^3*c1*y^3 + b1^4*y^4",
        " - x^4*al^4 + y^4*be^4 - 4*x^3*al^3*ga + 4*y^3*be^3*ga - 6*x^2*al^2*ga^2 + 6*y^2*be^2*ga^2",
        " - 4*x*al*ga^3 + 4*y*be*ga^3 - 6*c1^2*x^2*al^2*mu - 12*a1*c1*x^3*al^2*mu - 6*a1^2*x^4*al^2*mu",
        " + 6*c1^2*y^2*be^2*mu + 12*b1*c1*y^3*be^2*mu + 6*b1^2*y^4*be^2*mu - 12*c1^2*x*al*ga*mu",
        " - 24*a1*c1*x^2*al*ga*mu - 12*a1^2*x^3*al*ga*mu + 12*c1^2*y*be*ga*mu + 24*b1*c1*y^2*be*ga*mu",
        " + 12*b1^2*y^3*be*ga*mu - 12*a1*c1*x*ga^2*mu - 6*a1^2*x^2*ga^2*mu + 12*b1*c1*y*ga^2*mu",
        " + 6*b1^2*y^2*ga^2*mu",
    ),
);

const N62_CLOSED_FORM: (&str, &str) = (
    "1/(4*b)",
    concat!(
        "4*a^2*a1*c1*x - 4*a1*b*c1^3*x + 2*a^2*a1^2*x^2 - 6*a1^2*b*c1^2*x^2 - 4*a1^3*b*c1*x^3",
        " - a1^4*b*x^4 - 4*a^2*b1*c1*y + 4*b*b1*c1^3*y - 2*a^2*b1^2*y^2 + 6*b*b1^2*c1^2*y^2",
        " + 4*b*b1^3*c1*y^3 + b*b1^4*y^4 + 4*a*b*c1*x*al + 4*a*a1*b*x^2*al + 2*b^2*x^2*al^2",
        " - b*x^4*al^4 - 4*a*b*c1*y*be - 4*a*b*b1*y^2*be - 2*b^2*y^2*be^2 + b*y^4*be^4 + 4*a*a1*b*x*ga",
        " - 4*a*b*b1*y*ga + 4*b^2*x*al*ga - 4*b*x^3*al^3*ga - 4*b^2*y*be*ga + 4*b*y^3*be^3*ga",
        " - 6*b*x^2*al^2*ga^2 + 6*b*y^2*be^2*ga^2 - 4*b*x*al*ga^3 + 4*b*y*be*ga^3",
        " - 6*b*c1^2*x^2*al^2*mu - 12*a1*b*c1*x^3*al^2*mu - 6*a1^2*b*x^4*al^2*mu",
        " + 6*b*c1^2*y^2*be^2*mu + 12*b*b1*c1*y^3*be^2*mu + 6*b*b1^2*y^4*be^2*mu",
        " - 12*b*c1^2*x*al*ga*mu - 24*a1*b*c1*x^2*al*ga*mu - 12*a1^2*b*x^3*al*ga*mu",
        " + 12*b*c1^2*y*be*ga*mu + 24*b*b1*c1*y^2*be*ga*mu + 12*b*b1^2*y^3*be*ga*mu",
        " - 12*a1*b*c1*x*ga^2*mu - 6*a1^2*b*x^2*ga^2*mu + 12*b*b1*c1*y*ga^2*mu + 6*b*b1^2*y^2*ga^2*mu",
    ),
);

fn closed_form(family: SaddleFamily) -> (&'static str, &'static str) {
    use SaddleFamily::*;
    match family {
        N1 => N1_CLOSED_FORM,
        N2 => N2_CLOSED_FORM,
        N31 => N31_CLOSED_FORM,
        N32 => N32_CLOSED_FORM,
        N41 => N41_CLOSED_FORM,
        N42 => N42_CLOSED_FORM,
        N51 => N51_CLOSED_FORM,
        N52 => N52_CLOSED_FORM,
        N61 => N61_CLOSED_FORM,
        N62 => N62_CLOSED_FORM,
    }
}

fn parameter_env(p: &SaddleParams, affine: &AffineMap) -> Env {
    Env::new()
        .with_const("a", p.a.clone())
        .with_const("b", p.b.clone())
        .with_const("c", p.c.clone())
        .with_const("mu", p.mu.clone())
        .with_const("a1", affine.a1.clone())
        .with_const("b1", affine.b1.clone())
        .with_const("c1", affine.c1.clone())
        .with_const("al", affine.alpha1.clone())
        .with_const("be", affine.beta1.clone())
        .with_const("ga", affine.gamma1.clone())
}

/// Closed-form saddle crossing polynomial `H(x,0) − H(0,y)`.
///
/// The N1 form is stated in normal coordinates and ignores `affine` apart
/// from validation.
pub fn appendix_p(family: SaddleFamily, p: &SaddleParams, affine: &AffineMap) -> Result<BiPoly, CrossingError> {
    validate(family, p, affine).map_err(|v| CrossingError::Family(FamilyError::Invalid(v)))?;
    let env = parameter_env(p, affine);
    let (prefactor, body) = closed_form(family);
    let scale = parse_constant(prefactor, &env)?;
    Ok(parse_poly(body, &env)?.scale(&scale))
}

/// Crossing polynomial of the N1 normal-form integral as printed, with
/// `a/(2b)` rather than `a²/(2b)` in front of `X²`.
pub fn printed_n1_crossing(p: &SaddleParams) -> BiPoly {
    let env = parameter_env(p, &AffineMap::identity());
    let h = parse_poly("-x^4/4 + a/(2*b)*x^2 + b/2*y^2 + a*x*y", &env).expect("valid expression");
    let zero = BiPoly::zero();
    &h.compose(&BiPoly::x(), &zero) - &h.compose(&zero, &BiPoly::y())
}
