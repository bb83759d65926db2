//! The ten published example systems, stored as printed: explicit vector
//! fields and first integrals on both sides, plus the four expected crossing
//! pairs of each.
//!
//! Each entry also records normal-form parameters that reproduce its saddle
//! side through the family constructors. These are a cross-check only; the
//! explicit polynomials are authoritative.

use std::sync::OnceLock;

use crate::families::{
    AffineMap, FamilyError, LinearCenterParams, PiecewiseSystem, PolyField, SaddleFamily, SaddleParams, Subsystem,
};
use crate::poly::{parse_poly, parse_rational, BiPoly, Env, PolyError};

/// One registry example as source text.
#[derive(Debug, Clone, Copy)]
pub struct ExampleSource {
    pub id: &'static str,
    pub family: SaddleFamily,
    pub center_integral: &'static str,
    pub center_field: (&'static str, &'static str),
    /// Written in the linear forms `U` and `V` below.
    pub saddle_integral: &'static str,
    pub saddle_field: (&'static str, &'static str),
    pub u: &'static str,
    pub v: &'static str,
    /// Published crossing pairs, sorted by `x`.
    pub expected: [(f64, f64); 4],
    /// Which of `U`, `V` plays the first and second normal coordinate.
    pub normal_coords: (&'static str, &'static str),
    /// `(a, b, c, μ)`.
    pub saddle_params: (&'static str, &'static str, &'static str, &'static str),
    /// `(A, B, C, ω, sign)`.
    pub center_params: (&'static str, &'static str, &'static str, &'static str, i8),
}

/// A registry example ready for solving.
#[derive(Debug, Clone)]
pub struct ExampleEntry {
    pub id: &'static str,
    pub family: SaddleFamily,
    pub system: PiecewiseSystem,
    pub expected: [(f64, f64); 4],
}

fn parse(src: &str, env: &Env) -> BiPoly {
    parse_poly(src, env).unwrap_or_else(|e| panic!("registry expression {src:?}: {e}"))
}

impl ExampleSource {
    fn saddle_env(&self) -> Env {
        let base = Env::new();
        Env::new().with("U", parse(self.u, &base)).with("V", parse(self.v, &base))
    }

    pub fn center(&self) -> Subsystem {
        let env = Env::new();
        Subsystem::new(
            PolyField::new(parse(self.center_field.0, &env), parse(self.center_field.1, &env)),
            parse(self.center_integral, &env),
        )
    }

    pub fn saddle(&self) -> Subsystem {
        let env = self.saddle_env();
        Subsystem::new(
            PolyField::new(parse(self.saddle_field.0, &env), parse(self.saddle_field.1, &env)),
            parse(self.saddle_integral, &env),
        )
    }

    /// Builds the explicit system, applying the Hamiltonian guard.
    pub fn build(&self) -> Result<ExampleEntry, FamilyError> {
        Ok(ExampleEntry {
            id: self.id,
            family: self.family,
            system: PiecewiseSystem::explicit(self.center(), self.saddle())?,
            expected: self.expected,
        })
    }

    /// Center parameters recovered from the printed center integral.
    pub fn recovered_center(&self) -> Result<LinearCenterParams, PolyError> {
        let (a, b, c, w, sign) = self.center_params;
        Ok(LinearCenterParams {
            a: parse_rational(a)?,
            b: parse_rational(b)?,
            c: parse_rational(c)?,
            omega: parse_rational(w)?,
            sign,
        })
    }

    /// Saddle parameters and affine map recovered from the printed saddle
    /// integral.
    pub fn recovered_saddle(&self) -> Result<(SaddleParams, AffineMap), PolyError> {
        let (a, b, c, mu) = self.saddle_params;
        let params = SaddleParams::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?, parse_rational(mu)?);
        let env = self.saddle_env();
        let u = parse_poly(self.normal_coords.0, &env)?;
        let v = parse_poly(self.normal_coords.1, &env)?;
        let affine = AffineMap {
            a1: u.coeff(1, 0),
            b1: u.coeff(0, 1),
            c1: u.coeff(0, 0),
            alpha1: v.coeff(1, 0),
            beta1: v.coeff(0, 1),
            gamma1: v.coeff(0, 0),
        };
        Ok((params, affine))
    }
}

pub fn sources() -> &'static [ExampleSource] {
    &SOURCES
}

pub fn find_source(id: &str) -> Option<&'static ExampleSource> {
    let family: SaddleFamily = id.parse().ok()?;
    SOURCES.iter().find(|s| s.family == family)
}

/// All ten entries, built once.
pub fn registry() -> &'static [ExampleEntry] {
    static CELL: OnceLock<Vec<ExampleEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        SOURCES.iter().map(|s| s.build().unwrap_or_else(|e| panic!("registry entry {}: {e}", s.id))).collect()
    })
}

pub fn example(id: &str) -> Option<&'static ExampleEntry> {
    let family: SaddleFamily = id.parse().ok()?;
    registry().iter().find(|e| e.family == family)
}

static SOURCES: [ExampleSource; 10] = [
    ExampleSource {
        id: "N1",
        family: SaddleFamily::N1,
        center_integral: "(x - y/5)^2 - 6*y/5 + 49*y^2/100",
        center_field: ("-6/5 - 2/5*(x - y/5) + 49/50*y", "-2*(x - y/5)"),
        saddle_integral: "-2/5*U^2 - U*V - 5/8*V^2 - 1/4*V^4",
        saddle_field: (
            concat!(
                "1/800*(-3892 - 125*x^3 + 300*x^2*(-2+y) + 4148*y + 64*(-6+y)*y^2 - 15*x*(207",
                " + 16*(-4+y)*y))",
            ),
            concat!(
                "1/640*(-125*x^3 + 300*x^2*(-2+y) - 3*x*(683 + 80*(-4+y)*y) + 4*(-557 + y*(621",
                " + 16*(-6+y)*y)))",
            ),
        ),
        u: "3/10 + x/5 - 4*y/5",
        v: "4/5 + x/2 - 2*y/5",
        expected: [(0.387552, 2.38307), (1.13899, 3.06322), (6.15242, 9.65856), (14.4234, 20.9765)],
        normal_coords: ("V", "U"),
        saddle_params: ("-1", "-4/5", "0", "0"),
        center_params: ("-1/5", "3/5", "0", "7/10", 1),
    },
    ExampleSource {
        id: "N2",
        family: SaddleFamily::N2,
        center_integral: "-(x + 3/100*y)^2 - 2*(x/25 + 13/100*y) - 9801/10000*y^2",
        center_field: ("-13/50 - 3/50*(x + 3/100*y) - 9801/5000*y", "2/25 + 2*(x + 3/100*y)"),
        saddle_integral: "7/50*U^2 + 2/25*U*V + 2/175*V^2 - U*V^3",
        saddle_field: (
            concat!(
                "1/119910000*(-1072596688 + 2477433732*x + 84672*x^2*(-21011 + 4380*x) + 4*(818403452",
                " + 4473*x*(-267317 + 85128*x))*y + 317583*(-10020 + 6523*x)*y^2 + 932000244*y^3)",
            ),
            concat!(
                "1/39970000*(275724936 - 48*x*(12792695 + 2016*x*(-4521 + 928*x)) - 4*(206452811",
                " + 14112*x*(-21011 + 6570*x))*y + 2982*(267317 - 170256*x)*y^2 - 230177101*y^3)",
            ),
        ),
        u: "27/50 - 87/100*x - 93/100*y",
        v: "47/50 - 12/25*x - 71/100*y",
        expected: [(0.355545, 0.286309), (0.525244, 0.451964), (1.36335, 1.28996), (1.89636, 1.82657)],
        normal_coords: ("V", "U"),
        saddle_params: ("2/25", "7/25", "0", "0"),
        center_params: ("3/100", "-13/100", "1/25", "99/100", -1),
    },
    ExampleSource {
        id: "N31",
        family: SaddleFamily::N31,
        center_integral: "2*(31/50*x + 1/10*y) + (x + 77/100*y)^2 + 4/25*y^2",
        center_field: ("1/5 + 77/50*(x + 77/100*y) + 8/25*y", "-31/25 - 2*(x + 77/100*y)"),
        saddle_integral: "73/200*U^2 - 3/2*U^2*V^2 + 1/4*V^4",
        saddle_field: (
            concat!(
                "1/4130000*(-405967 + 5474739*y + 9*(778786*x + 13*x^2*(-146848 + 73877*x)",
                " + 4*x*(-728887 + 615690*x)*y + 57*(-16337 + 31442*x)*y^2 + 357029*y^3))",
            ),
            concat!(
                "1/12390000*(-27263925*x^3 + 1053*(55627 - 73877*y)*x^2 - 24*x*(716899 + 9*y*(-477256",
                " + 307845*y)) - 2*(862465 + 27*y*(389393 + y*(-728887 + 298699*y))))",
            ),
        ),
        u: "43/100 - 24/25*x - 9/20*y",
        v: "-39/100 + 39/100*x + 57/100*y",
        expected: [(0.190098, 0.482586), (0.325214, 0.700087), (0.439849, 0.86669), (4.94215, 6.23885)],
        normal_coords: ("U", "V"),
        saddle_params: ("0", "0", "-73/100", "0"),
        center_params: ("77/100", "-1/10", "31/50", "2/5", 1),
    },
    ExampleSource {
        id: "N32",
        family: SaddleFamily::N32,
        center_integral: "2*(-2/5*x + 3/10*y) + (x + y/2)^2 + 49/100*y^2",
        center_field: ("3/5 + x + 37/25*y", "4/5 - 2*(x + y/2)"),
        saddle_integral: "-8/15*U^2 - 4/5*U*V - 3/10*V^2 - 3/2*U^2*V^2 + 1/4*V^4",
        saddle_field: (
            concat!(
                "1/1500*(-22688 + 55*x^3 + 6*x^2*(307 - 50*y) - 24*x*(-615 + 2*y*(13 + 5*y))",
                " + y*(31560 + y*(-6618 + 485*y)))",
            ),
            concat!(
                "1/1500*(-215*x^3 - 3*x^2*(676 + 55*y) + 12*x*(-510 + y*(-307 + 25*y)) + 8*(1564",
                " + y*(-1845 + y*(39 + 10*y))))",
            ),
        ),
        u: "1 - 3/5*x - 9/10*y",
        v: "-4/5 - x/10 + y/10",
        expected: [(1.60038, 0.971298), (1.72908, 1.12275), (3.35256, 3.01931), (22.0218, 24.7284)],
        normal_coords: ("U", "V"),
        saddle_params: ("-4/5", "-3/5", "0", "0"),
        center_params: ("1/2", "-3/10", "-2/5", "7/10", 1),
    },
    ExampleSource {
        id: "N41",
        family: SaddleFamily::N41,
        center_integral: "(x - 4/5*y)^2 + 2*(-3/5*x + 7/10*y) + 1/25*y^2",
        center_field: ("7/5 - 8/5*(x - 4/5*y) + 2/25*y", "6/5 - 2*(x - 4/5*y)"),
        saddle_integral: "-1/4*U^4 - 1/10*V^2 - 3/2*U^2*V^2",
        saddle_field: (
            concat!(
                "1/2100*(-8013 + x*(6859 - 2*x*(621 + 80*x)) + 14302*y + 12*x*(-927 + 173*x)*y",
                " + 12*(-513 + 233*x)*y^2 + 776*y^3)",
            ),
            concat!(
                "1/4200*(6927 - 775*x^3 + 30*x^2*(81 + 32*y) + x*(-5798 + 24*(207 - 173*y)*y)",
                " - 2*y*(6859 - 5562*y + 932*y^2))",
            ),
        ),
        u: "-9/10 + x/2 + y/5",
        v: "-3/5 - x/10 + 4/5*y",
        expected: [(2.02448, 0.845234), (2.35986, 1.22555), (2.70908, 1.62987), (10.1815, 10.6126)],
        normal_coords: ("V", "U"),
        saddle_params: ("0", "0", "1/5", "0"),
        center_params: ("-4/5", "-7/10", "-3/5", "1/5", 1),
    },
    ExampleSource {
        id: "N42",
        family: SaddleFamily::N42,
        center_integral: "(x - 7/10*y)^2 + 2*(-x + 3/5*y) + 4/25*y^2",
        center_field: ("6/5 - 7/5*(x - 7/10*y) + 8/25*y", "2 - 2*(x - 7/10*y)"),
        saddle_integral: "-1/5*U^2 - 1/4*U^4 - 3/10*U*V - 9/80*V^2 - 3/2*U^2*V^2",
        saddle_field: (
            concat!(
                "1/3200*(-16108 + x*(28511 + 8*x*(-2127 + 424*x)) + 34726*y + 96*x*(-413 + 124*x)*y",
                " + 96*(-229 + 136*x)*y^2 + 5632*y^3)",
            ),
            concat!(
                "1/6400*(25276 + x*(-45083 + 8*(3351 - 664*x)*x) - 57022*y + 96*(709 - 212*x)*x*y",
                " + 96*(413 - 248*x)*y^2 - 8704*y^3)",
            ),
        ),
        u: "7/10 - 2/5*x - 4/5*y",
        v: "-4/5 + x/2 + y/5",
        expected: [(2.55713, 0.821581), (2.72657, 1.05173), (3.4514, 2.00246), (4.00261, 2.70789)],
        normal_coords: ("V", "U"),
        saddle_params: ("-3/10", "-2/5", "0", "0"),
        center_params: ("-7/10", "-3/5", "-1", "2/5", 1),
    },
    ExampleSource {
        id: "N51",
        family: SaddleFamily::N51,
        center_integral: "(x - 43/100*y)^2 + 2*(7/100*x + 11/50*y) + 529/625*y^2",
        center_field: ("11/25 - 43/50*(x - 43/100*y) + 1058/625*y", "-7/50 - 2*(x - 43/100*y)"),
        saddle_integral: "1/4*(-U^4 + V^4) + 13/100*U^2 + 21/100*U^2*V^2",
        saddle_field: (
            concat!(
                "1/140000000*(-17828080 + 398806366*x^3 + 6*x^2*(-97025863 + 222074762*y)",
                " + 2*y*(215022709 + 68*y*(-5722053 + 3962714*y)) + x*(354597367 + 24*y*(-55989761",
                " + 61426967*y)))",
            ),
            concat!(
                "1/280000000*(38035040 + x*(-590906221 - 918*x*(-1102793 + 776391*x)) - 709194734*y",
                " + 12*(194051726 - 199403183*x)*x*y + 24*(55989761 - 111037381*x)*y^2",
                " - 982831472*y^3)",
            ),
        ),
        u: "1/20 + 19/50*x + 13/25*y",
        v: "-7/25 + 59/100*x + 33/50*y",
        expected: [(0.135002, 0.072169), (0.385675, 0.278707), (1.17787, 1.03194), (2.14886, 1.98091)],
        normal_coords: ("U", "V"),
        saddle_params: ("0", "0", "-13/50", "-7/50"),
        center_params: ("-43/100", "-11/50", "7/100", "23/25", 1),
    },
    ExampleSource {
        id: "N52",
        family: SaddleFamily::N52,
        center_integral: "-(x - y)^2 - 2*(4/5*x - 3/5*y) - y^2",
        center_field: ("6/5 + 2*(x - y) - 2*y", "8/5 + 2*(x - y)"),
        saddle_integral: "1/4*(-U^4 + V^4) + 5/16*U^2 + 1/2*U*V + 1/5*V^2 + 3/5*U^2*V^2",
        saddle_field: (
            concat!(
                "1/1500*(-9995 + 5*x*(4661 + 9*x*(-352 + 17*x)) + 3*(5816 + 9*(-864 + x)*x)*y",
                " - 81*(106 + 17*x)*y^2 - 729*y^3)",
            ),
            concat!(
                "1/9000*(90395 + 5*x*(-38291 + 6*(4323 - 388*x)*x) - 30*(4661 + 9*x*(-704 + 51*x))*y",
                " - 162*(-432 + x)*y^2 + 2754*y^3)",
            ),
        ),
        u: "-1/10 - 7/10*x - 3/5*y",
        v: "1 - x/2 - 3/10*y",
        expected: [(0.52839, 1.10766), (1.00057, 1.47942), (1.72915, 2.02288), (7.95553, 6.47249)],
        normal_coords: ("U", "V"),
        saddle_params: ("1/2", "2/5", "0", "-2/5"),
        center_params: ("-1", "3/5", "4/5", "1", -1),
    },
    ExampleSource {
        id: "N61",
        family: SaddleFamily::N61,
        center_integral: "2*(-x/2 + 3/5*y) + 9/25*y^2 + (x + y)^2",
        center_field: ("6/5 + 18/25*y + 2*(x + y)", "1 - 2*(x + y)"),
        saddle_integral: "1/4*(-U^4 - V^4) - 1/5*V^2 - 27/20*U^2*V^2",
        saddle_field: (
            concat!(
                "1/21000*(-218240 + 36*x*(9544 - 5082*x + 993*x^2) + 393744*y + 9*x*(-45808",
                " + 13989*x)*y + 3*(-77840 + 51789*x)*y^2 + 69994*y^3)",
            ),
            concat!(
                "1/7000*(63232 - 6*x*(16832 + 9*x*(-1008 + 193*x)) - 12*(9544 + 3*x*(-3388",
                " + 993*x))*y + 3*(22904 - 13989*x)*y^2 - 17263*y^3)",
            ),
        ),
        u: "-4/5 + 3/10*x + 1/10*y",
        v: "-4/5 + 3/5*x + 9/10*y",
        expected: [(2.11393, 0.946661), (2.57797, 1.3437), (3.8652, 2.44633), (11.5231, 9.01165)],
        normal_coords: ("V", "U"),
        saddle_params: ("0", "0", "2/5", "9/10"),
        center_params: ("1", "-3/5", "-1/2", "3/5", 1),
    },
    ExampleSource {
        id: "N62",
        family: SaddleFamily::N62,
        center_integral: "(x - 29/50*y)^2 + 2*(-37/100*x + 87/100*y) + 9/2500*y^2",
        center_field: ("87/50 - 29/25*(x - 29/50*y) + 9/1250*y", "37/50 - 2*(x - 29/50*y)"),
        saddle_integral: "1/4*(-U^4 - V^4) - 31/200*U^2 - 4/25*U*V - 32/775*V^2 + 12/25*U^2*V^2",
        saddle_field: (
            concat!(
                "1/11958250000*(898774048 - 5365417169*x - 6417*x^2*(-421623 + 62735*x)",
                " + 3915993356*y + 1302*(3990158 - 2625497*x)*x*y + 1116*(-5047468 + 987185*x)*y^2",
                " + 3286262384*y^3)",
            ),
            concat!(
                "1/23916500000*(x*(-18163986613 + 31*(678017913 - 261411193*x)*x) + 38502*x*(-281082",
                " + 62735*x)*y + 2604*(-1995079 + 2625497*x)*y^2 - 734465640*y^3 + 7*(532650799",
                " + 1532976334*y))",
            ),
        ),
        u: "29/100 - x/25 - 27/50*y",
        v: "-51/100 + 57/100*x - 1/50*y",
        expected: [(0.765476, 0.0111834), (1.07893, 0.202174), (1.84751, 0.985982), (3.25582, 2.97642)],
        normal_coords: ("U", "V"),
        saddle_params: ("-4/25", "-64/775", "0", "-8/25"),
        center_params: ("-29/50", "-87/100", "-37/100", "3/50", 1),
    },];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{center_field, center_integral, saddle_field, saddle_integral, GUARD_TOL};
    use crate::poly::{qi, Q};
    use num_traits::Zero;

    /// `f = k·g` for a single rational `k`; returns `k`.
    fn proportional(f: &(BiPoly, BiPoly), g: &(BiPoly, BiPoly)) -> Option<Q> {
        let (i, j, c) = g.0.terms().next()?;
        let k = f.0.coeff(i, j) / c;
        (k != Q::zero() && f.0 == g.0.scale(&k) && f.1 == g.1.scale(&k)).then_some(k)
    }

    #[test]
    fn every_entry_passes_the_guard() {
        for e in registry() {
            assert!(e.system.center.guard_residual() <= GUARD_TOL, "{}", e.id);
            assert!(e.system.saddle.guard_residual() <= GUARD_TOL, "{}", e.id);
        }
    }

    #[test]
    fn expected_pairs_are_positive_and_ordered() {
        for s in sources() {
            assert!(s.expected.iter().all(|&(x, y)| x > 0.0 && y > 0.0));
            assert!(s.expected.windows(2).all(|w| w[0].0 < w[1].0), "{}", s.id);
        }
    }

    #[test]
    fn recovered_parameters_reproduce_printed_systems() {
        for s in sources() {
            let center = s.recovered_center().unwrap();
            let printed = s.center();
            assert_eq!(center_integral(&center), printed.integral.h, "{} center integral", s.id);
            let cf = center_field(&center);
            assert!(proportional(&(printed.field.fx.clone(), printed.field.fy.clone()), &cf).is_some(), "{}", s.id);

            let (params, affine) = s.recovered_saddle().unwrap();
            let printed = s.saddle();
            assert_eq!(saddle_integral(s.family, &params, &affine).unwrap(), printed.integral.h, "{} saddle", s.id);
            let sf = saddle_field(s.family, &params, &affine).unwrap();
            assert!(proportional(&(printed.field.fx.clone(), printed.field.fy.clone()), &sf).is_some(), "{}", s.id);
        }
    }

    #[test]
    fn printed_n1_fields_at_origin() {
        let s = find_source("N1").unwrap();
        let c = s.center();
        assert_eq!(c.field.fx.eval(0.0, 0.0), -6.0 / 5.0);
        assert_eq!(c.field.fy.eval(0.0, 0.0), 0.0);
        let sd = s.saddle();
        assert_eq!(sd.field.fx.coeff(0, 0), crate::poly::q(-3892, 800));
        assert_eq!(sd.field.fy.coeff(0, 0), crate::poly::q(-557 * 4, 640));
        assert_eq!(c.integral.h.eval(1.0, 0.0), 1.0);
        assert_eq!(find_source("N2").unwrap().center().integral.h.coeff(0, 0), qi(0));
    }
}
