use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::forms::{center_field, center_integral, saddle_field, saddle_integral};
use super::params::{validate, AffineMap, LinearCenterParams, SaddleFamily, SaddleParams};
use super::FamilyError;
use crate::poly::{BiPoly, Var};

/// Anything that yields a planar velocity.
pub trait VectorField: Sync {
    fn velocity(&self, x: f64, y: f64) -> (f64, f64);
}

/// A scalar function with an exact gradient.
pub trait FirstIntegral: Sync {
    fn value(&self, x: f64, y: f64) -> f64;
    fn gradient(&self, x: f64, y: f64) -> (f64, f64);
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyField {
    pub fx: BiPoly,
    pub fy: BiPoly,
}

impl PolyField {
    pub fn new(fx: BiPoly, fy: BiPoly) -> Self {
        PolyField { fx, fy }
    }
}

impl VectorField for PolyField {
    fn velocity(&self, x: f64, y: f64) -> (f64, f64) {
        (self.fx.eval(x, y), self.fy.eval(x, y))
    }
}

/// Polynomial first integral with its partial derivatives precomputed.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    pub h: BiPoly,
    hx: BiPoly,
    hy: BiPoly,
}

impl Hamiltonian {
    pub fn new(h: BiPoly) -> Self {
        let hx = h.partial(Var::X);
        let hy = h.partial(Var::Y);
        Hamiltonian { h, hx, hy }
    }
}

impl FirstIntegral for Hamiltonian {
    fn value(&self, x: f64, y: f64) -> f64 {
        self.h.eval(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        (self.hx.eval(x, y), self.hy.eval(x, y))
    }
}

/// `max |∇H·F| / (1 + |∇H|·|F|)` over the points.
pub fn hamiltonian_residual(h: &dyn FirstIntegral, f: &dyn VectorField, pts: &[(f64, f64)]) -> f64 {
    pts.iter()
        .map(|&(x, y)| {
            let (hx, hy) = h.gradient(x, y);
            let (fx, fy) = f.velocity(x, y);
            (hx * fx + hy * fy).abs() / (1.0 + hx.hypot(hy) * fx.hypot(fy))
        })
        .fold(0.0, f64::max)
}

/// `n` deterministic pseudo-random points in `[-r, r]²`.
pub fn sample_points(seed: u64, n: usize, r: f64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (rng.gen_range(-r..=r), rng.gen_range(-r..=r))).collect()
}

/// One side of the piecewise system: a polynomial field with its integral.
#[derive(Debug, Clone, PartialEq)]
pub struct Subsystem {
    pub field: PolyField,
    pub integral: Hamiltonian,
}

impl Subsystem {
    pub fn new(field: PolyField, integral: BiPoly) -> Self {
        Subsystem { field, integral: Hamiltonian::new(integral) }
    }

    /// Transcription guard residual on a fixed sample of `[-2, 2]²`.
    pub fn guard_residual(&self) -> f64 {
        hamiltonian_residual(&self.integral, &self.field, &sample_points(0x5eed, 100, 2.0))
    }
}

/// How a system was specified.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq)]
pub enum SystemSource {
    Params { center: LinearCenterParams, family: SaddleFamily, params: SaddleParams, affine: AffineMap },
    Explicit,
}

/// Linear center on the closed complement of the first quadrant, saddle
/// on the first quadrant.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseSystem {
    pub center: Subsystem,
    pub saddle: Subsystem,
    pub source: SystemSource,
}

/// Explicit-mode systems must satisfy `∇H·F ≈ 0` to this normalized level.
pub const GUARD_TOL: f64 = 1e-10;

impl PiecewiseSystem {
    pub fn from_params(
        center: LinearCenterParams,
        family: SaddleFamily,
        params: SaddleParams,
        affine: AffineMap,
    ) -> Result<Self, FamilyError> {
        let mut violations = center.validate().err().unwrap_or_default();
        violations.extend(validate(family, &params, &affine).err().unwrap_or_default());
        if !violations.is_empty() {
            return Err(FamilyError::Invalid(violations));
        }
        let (cx, cy) = center_field(&center);
        let (sx, sy) = saddle_field(family, &params, &affine)?;
        let sh = saddle_integral(family, &params, &affine)?;
        Ok(PiecewiseSystem {
            center: Subsystem::new(PolyField::new(cx, cy), center_integral(&center)),
            saddle: Subsystem::new(PolyField::new(sx, sy), sh),
            source: SystemSource::Params { center, family, params, affine },
        })
    }

    /// Builds from explicit polynomials, rejecting pairs that fail the
    /// Hamiltonian guard.
    pub fn explicit(center: Subsystem, saddle: Subsystem) -> Result<Self, FamilyError> {
        for (side, sub) in [("center", &center), ("saddle", &saddle)] {
            let r = sub.guard_residual();
            if !(r <= GUARD_TOL) {
                return Err(FamilyError::NotHamiltonian { side, residual: r });
            }
        }
        Ok(PiecewiseSystem { center, saddle, source: SystemSource::Explicit })
    }

    pub fn family(&self) -> Option<SaddleFamily> {
        match &self.source {
            SystemSource::Params { family, .. } => Some(*family),
            SystemSource::Explicit => None,
        }
    }
}

/// Small random rational in `[-max, max]` with denominator ≤ `den`,
/// optionally nonzero.
fn small_rational(rng: &mut impl Rng, max: i64, den: i64, nonzero: bool) -> crate::poly::Q {
    loop {
        let d = rng.gen_range(1..=den);
        let n = rng.gen_range(-max * d..=max * d);
        if !nonzero || n != 0 {
            return crate::poly::q(n, d);
        }
    }
}

/// Random saddle parameters and nonsingular affine map satisfying every
/// constraint of `family`.
pub fn random_saddle(family: SaddleFamily, rng: &mut impl Rng) -> (SaddleParams, AffineMap) {
    loop {
        let mut p = SaddleParams::default();
        if family.is_c_subcase() {
            p.c = small_rational(rng, 2, 10, true);
        } else {
            p.a = small_rational(rng, 2, 10, true);
            p.b = small_rational(rng, 2, 10, true);
        }
        if family.uses_mu() {
            p.mu = small_rational(rng, 2, 10, false);
        }
        let r = |rng: &mut _| small_rational(rng, 2, 10, false);
        let affine = AffineMap {
            a1: r(rng),
            b1: r(rng),
            c1: r(rng),
            alpha1: r(rng),
            beta1: r(rng),
            gamma1: r(rng),
        };
        if validate(family, &p, &affine).is_ok() {
            return (p, affine);
        }
    }
}

/// Random valid linear center.
pub fn random_center(rng: &mut impl Rng) -> LinearCenterParams {
    let r = |rng: &mut _| small_rational(rng, 1, 10, false);
    let omega = loop {
        let w = small_rational(rng, 1, 10, true);
        if w > crate::poly::qi(0) {
            break w;
        }
    };
    LinearCenterParams { a: r(rng), b: r(rng), c: r(rng), omega, sign: if rng.gen_bool(0.5) { 1 } else { -1 } }
}

/// Random valid piecewise system for `family`.
pub fn random_system(family: SaddleFamily, rng: &mut impl Rng) -> PiecewiseSystem {
    let center = random_center(rng);
    let (params, affine) = random_saddle(family, rng);
    PiecewiseSystem::from_params(center, family, params, affine).expect("sampled parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Env};

    #[test]
    fn circle_residual_is_zero() {
        let sys = PiecewiseSystem::from_params(
            LinearCenterParams::circle(),
            SaddleFamily::N1,
            SaddleParams::new(crate::poly::qi(1), crate::poly::q(-4, 5), crate::poly::qi(0), crate::poly::qi(0)),
            AffineMap::identity(),
        )
        .unwrap();
        assert_eq!(sys.center.guard_residual(), 0.0);
    }

    #[test]
    fn corrupted_coefficient_fails_guard() {
        let env = Env::new();
        let h = parse_poly("x^2 + y^2", &env).unwrap();
        let good = Subsystem::new(PolyField::new(parse_poly("-y", &env).unwrap(), parse_poly("x", &env).unwrap()), h.clone());
        let bad = Subsystem::new(PolyField::new(parse_poly("-y", &env).unwrap(), parse_poly("1.01*x", &env).unwrap()), h);
        assert!(bad.guard_residual() > 1e-6);
        assert!(PiecewiseSystem::explicit(good.clone(), bad).is_err());
        assert!(PiecewiseSystem::explicit(good.clone(), good).is_ok());
    }

    #[test]
    fn random_systems_are_deterministic_and_valid() {
        for family in SaddleFamily::ALL {
            let a = random_system(family, &mut ChaCha8Rng::seed_from_u64(7));
            let b = random_system(family, &mut ChaCha8Rng::seed_from_u64(7));
            assert_eq!(a, b);
            assert!(a.saddle.guard_residual() <= GUARD_TOL, "{family}");
        }
    }
}
