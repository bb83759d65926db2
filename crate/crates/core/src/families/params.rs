//! Parameter types for the center and saddle sides, and their validation.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{qi, BiPoly, Q};

/// The ten saddle families, with the subcase digit where a family splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SaddleFamily {
    N1,
    N2,
    N31,
    N32,
    N41,
    N42,
    N51,
    N52,
    N61,
    N62,
}

impl SaddleFamily {
    pub const ALL: [SaddleFamily; 10] = [
        SaddleFamily::N1,
        SaddleFamily::N2,
        SaddleFamily::N31,
        SaddleFamily::N32,
        SaddleFamily::N41,
        SaddleFamily::N42,
        SaddleFamily::N51,
        SaddleFamily::N52,
        SaddleFamily::N61,
        SaddleFamily::N62,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SaddleFamily::N1 => "N1",
            SaddleFamily::N2 => "N2",
            SaddleFamily::N31 => "N31",
            SaddleFamily::N32 => "N32",
            SaddleFamily::N41 => "N41",
            SaddleFamily::N42 => "N42",
            SaddleFamily::N51 => "N51",
            SaddleFamily::N52 => "N52",
            SaddleFamily::N61 => "N61",
            SaddleFamily::N62 => "N62",
        }
    }

    /// Subcase with `a = b = 0` and the quadratic part carried by `c`.
    pub fn is_c_subcase(self) -> bool {
        matches!(self, SaddleFamily::N31 | SaddleFamily::N41 | SaddleFamily::N51 | SaddleFamily::N61)
    }

    /// Families whose quartic part carries the `μ` parameter.
    pub fn uses_mu(self) -> bool {
        matches!(self, SaddleFamily::N51 | SaddleFamily::N52 | SaddleFamily::N61 | SaddleFamily::N62)
    }
}

impl fmt::Display for SaddleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SaddleFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s.trim().chars().filter(|c| !matches!(c, '_' | '-' | ' ')).collect::<String>().to_uppercase();
        SaddleFamily::ALL
            .into_iter()
            .find(|f| f.as_str() == norm)
            .ok_or_else(|| format!("unknown saddle family {s:?} (expected one of N1, N2, N31, …, N62)"))
    }
}

/// Parameters of the saddle normal form. Entries a family does not use must
/// be zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SaddleParams {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub mu: Q,
}

impl SaddleParams {
    pub fn new(a: Q, b: Q, c: Q, mu: Q) -> Self {
        SaddleParams { a, b, c, mu }
    }
}

/// `u = c1 + a1·x + b1·y`, `v = alpha1·x + beta1·y + gamma1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    pub a1: Q,
    pub b1: Q,
    pub c1: Q,
    pub alpha1: Q,
    pub beta1: Q,
    pub gamma1: Q,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap { a1: Q::one(), b1: Q::zero(), c1: Q::zero(), alpha1: Q::zero(), beta1: Q::one(), gamma1: Q::zero() }
    }

    /// Determinant `a1·beta1 − b1·alpha1` of the linear part.
    pub fn det(&self) -> Q {
        &self.a1 * &self.beta1 - &self.b1 * &self.alpha1
    }

    pub fn u(&self) -> BiPoly {
        BiPoly::new(vec![vec![self.c1.clone(), self.b1.clone()], vec![self.a1.clone()]])
    }

    pub fn v(&self) -> BiPoly {
        BiPoly::new(vec![vec![self.gamma1.clone(), self.beta1.clone()], vec![self.alpha1.clone()]])
    }
}

/// Linear center with first integral
/// `sign·[(A·y + x)² + 2(C·x − B·y) + ω²y²]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCenterParams {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub omega: Q,
    pub sign: i8,
}

impl LinearCenterParams {
    pub fn circle() -> Self {
        LinearCenterParams { a: Q::zero(), b: Q::zero(), c: Q::zero(), omega: Q::one(), sign: 1 }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        if !self.omega.is_positive() {
            v.push(Violation::new("ω>0", format!("omega = {}", self.omega)));
        }
        if self.sign != 1 && self.sign != -1 {
            v.push(Violation::new("sign=±1", format!("sign = {}", self.sign)));
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }
}

/// One violated parameter constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: &'static str,
    pub detail: String,
}

impl Violation {
    fn new(constraint: &'static str, detail: String) -> Self {
        Violation { constraint, detail }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated ({})", self.constraint, self.detail)
    }
}

/// Checks every family and affine constraint; returns all violations.
pub fn validate(family: SaddleFamily, p: &SaddleParams, affine: &AffineMap) -> Result<(), Vec<Violation>> {
    use SaddleFamily::*;
    let mut out = Vec::new();
    let mut need = |ok: bool, name: &'static str, detail: String| {
        if !ok {
            out.push(Violation::new(name, detail));
        }
    };
    let (a, b, c, mu) = (&p.a, &p.b, &p.c, &p.mu);
    let show = |name: &str, v: &Q| format!("{name} = {v}");

    if !family.uses_mu() {
        need(mu.is_zero(), "μ=0", show("mu", mu));
    }
    match family {
        N1 => {
            need(b.is_negative(), "b<0", show("b", b));
            need(c.is_zero(), "c=0", show("c", c));
        }
        N2 => {
            need(a.is_positive(), "a>0", show("a", a));
            need(!b.is_zero(), "b≠0", show("b", b));
            need(c.is_zero(), "c=0", show("c", c));
        }
        N31 | N51 => {
            need(a.is_zero(), "a=0", show("a", a));
            need(b.is_zero(), "b=0", show("b", b));
            need(c.is_negative(), "c<0", show("c", c));
        }
        N41 | N61 => {
            need(a.is_zero(), "a=0", show("a", a));
            need(b.is_zero(), "b=0", show("b", b));
            need(c.is_positive(), "c>0", show("c", c));
        }
        N32 => {
            need(c.is_zero(), "c=0", show("c", c));
            need(!(a * b).is_zero(), "a·b≠0", format!("a = {a}, b = {b}"));
            if !b.is_zero() {
                let e = a * a / b - qi(6) * b;
                need(e.is_positive(), "a²/b−6b>0", format!("a²/b − 6b = {e}"));
            }
        }
        N42 => {
            need(c.is_zero(), "c=0", show("c", c));
            need(!a.is_zero(), "a≠0", show("a", a));
            need(b.is_negative(), "b<0", show("b", b));
        }
        N52 | N62 => {
            need(c.is_zero(), "c=0", show("c", c));
            need(!b.is_zero(), "b≠0", show("b", b));
            if !b.is_zero() {
                let (a2, b2) = (a * a, b * b);
                let six = qi(6) * &a2 * &b2 * mu;
                if family == N52 {
                    let e = (&a2 * &a2 - &b2 * &b2 - six) / b;
                    need(e.is_positive(), "(a⁴−b⁴−6a²b²μ)/b>0", format!("value = {e}"));
                } else {
                    let e = (&a2 * &a2 + &b2 * &b2 + six) / b;
                    need(e.is_negative(), "(a⁴+b⁴+6a²b²μ)/b<0", format!("value = {e}"));
                }
            }
        }
    }
    if affine.det().is_zero() {
        out.push(Violation::new("b₁α₁ − a₁β₁ ≠ 0", "affine map is singular".to_string()));
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn names(r: Result<(), Vec<Violation>>) -> Vec<&'static str> {
        r.err().unwrap_or_default().into_iter().map(|v| v.constraint).collect()
    }

    #[test]
    fn n1_boundary() {
        let id = AffineMap::identity();
        let ok = SaddleParams::new(qi(1), q(-4, 5), qi(0), qi(0));
        assert!(validate(SaddleFamily::N1, &ok, &id).is_ok());
        let bad = SaddleParams::new(qi(1), qi(0), qi(0), qi(0));
        assert_eq!(names(validate(SaddleFamily::N1, &bad, &id)), vec!["b<0"]);
    }

    #[test]
    fn singular_affine() {
        let aff = AffineMap { a1: qi(1), b1: qi(1), c1: qi(0), alpha1: qi(2), beta1: qi(2), gamma1: qi(0) };
        let p = SaddleParams::new(qi(1), qi(-1), qi(0), qi(0));
        assert_eq!(names(validate(SaddleFamily::N1, &p, &aff)), vec!["b₁α₁ − a₁β₁ ≠ 0"]);
    }

    #[test]
    fn unused_parameters_must_vanish() {
        let id = AffineMap::identity();
        let p = SaddleParams::new(qi(1), qi(0), qi(-1), qi(1));
        assert_eq!(names(validate(SaddleFamily::N31, &p, &id)), vec!["μ=0", "a=0"]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in SaddleFamily::ALL {
            assert_eq!(f.to_string().parse::<SaddleFamily>().unwrap(), f);
        }
        assert_eq!("n5_2".parse::<SaddleFamily>().unwrap(), SaddleFamily::N52);
        assert!("N7".parse::<SaddleFamily>().is_err());
    }

    #[test]
    fn center_requires_positive_omega() {
        let mut c = LinearCenterParams::circle();
        c.omega = qi(0);
        assert_eq!(names(c.validate()), vec!["ω>0"]);
    }
}
