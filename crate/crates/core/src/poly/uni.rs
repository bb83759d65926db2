//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{q_from_f64, to_f64, Q};
use super::PolyError;

/// Univariate polynomial with exact rational coefficients, constant term
/// first. Trailing zeros are always stripped, so the leading coefficient is
/// nonzero unless the polynomial is identically zero.
///
/// A float copy of the coefficients is kept for fast evaluation, together
/// with a primitive integer multiple used for exact sign tests.
#[derive(Clone)]
pub struct UniPoly {
    coeffs: Vec<Q>,
    approx: Vec<f64>,
    // positive rational multiple of `coeffs` with integer entries
    integral: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let approx = coeffs.iter().map(to_f64).collect();
        let integral = clear_denominators(&coeffs);
        UniPoly { coeffs, approx, integral }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// Monic linear factor `t − r`.
    pub fn linear_root(r: Q) -> Self {
        Self::new(vec![-r, Q::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn approx_coeffs(&self) -> &[f64] {
        &self.approx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Horner evaluation in double precision.
    pub fn eval(&self, t: f64) -> f64 {
        self.approx.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Value and first derivative by a single Horner pass.
    pub fn eval_with_derivative(&self, t: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in self.approx.iter().rev() {
            dp = dp * t + p;
            p = p * t + c;
        }
        (p, dp)
    }

    pub fn eval_exact(&self, t: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
    }

    /// Exact sign of the polynomial at a floating-point abscissa.
    ///
    /// A float Horner pass with a running error bound settles most calls;
    /// only values inside the bound fall back to big-integer evaluation.
    pub fn sign_at(&self, t: f64) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let n = self.approx.len() as f64;
        let (mut v, mut mag) = (0.0_f64, 0.0_f64);
        for &c in self.approx.iter().rev() {
            v = v * t + c;
            mag = mag * t.abs() + c.abs();
        }
        let bound = (4.0 * n + 4.0) * f64::EPSILON * mag;
        if v.is_finite() && mag.is_finite() && v.abs() > bound {
            return if v > 0.0 { 1 } else { -1 };
        }
        self.exact_sign_at(t)
    }

    fn exact_sign_at(&self, t: f64) -> i8 {
        // t = m·2^e exactly
        let (mant, exp) = decompose(t);
        let n = self.integral.len() - 1;
        let acc = if exp >= 0 {
            let x = BigInt::from(mant) << (exp as usize);
            self.integral.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
        } else {
            let k = (-exp) as usize;
            let m = BigInt::from(mant);
            let mut acc = self.integral[n].clone();
            for i in (0..n).rev() {
                acc = acc * &m + (&self.integral[i] << (k * (n - i)));
            }
            acc
        };
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Euclidean division: `self = quotient·divisor + remainder`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial("division by the zero polynomial"));
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lc = divisor.leading();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let factor = &rem[k + dd] / &lc;
            if !factor.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &factor * c;
                }
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (quot, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(quot)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free factorisation: `self = c · Π fₖ^k` with each `fₖ`
    /// monic, square-free and pairwise coprime. Returns `(fₖ, k)` for the
    /// nonconstant factors.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while b.degree() > 0 {
            a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), k));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn square_free_part(&self) -> Self {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Cauchy bound: every complex root satisfies `|t| < 1 + max |cᵢ/c_n|`.
    pub fn cauchy_bound(&self) -> f64 {
        if self.degree() == 0 {
            return 1.0;
        }
        let lc = self.leading();
        let m = self.coeffs[..self.degree()]
            .iter()
            .map(|c| to_f64(&(c / &lc).abs()))
            .fold(0.0_f64, f64::max);
        1.0 + m
    }

    /// Divides out every exact root at `t` and returns how many were removed.
    pub fn deflate_root(&self, t: f64) -> (Self, usize) {
        let r = q_from_f64(t);
        let lin = Self::linear_root(r.clone());
        let mut p = self.clone();
        let mut count = 0;
        while !p.is_zero() && p.degree() > 0 && p.eval_exact(&r).is_zero() {
            p = p.exact_div(&lin).expect("root divides");
            count += 1;
        }
        (p, count)
    }

    /// Sturm sequence of a square-free polynomial: `p, p', −rem(...)...`,
    /// each scaled by a positive constant.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![normalize_positive(self), normalize_positive(&self.derivative())];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            if seq[n - 1].degree() == 0 {
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero");
            seq.push(normalize_positive(&-&r));
        }
        seq
    }

    /// Newton-form interpolation through `(tᵢ, vᵢ)` with distinct nodes.
    pub fn interpolate(nodes: &[Q], values: &[Q]) -> Self {
        assert_eq!(nodes.len(), values.len());
        let n = nodes.len();
        let mut dd: Vec<Q> = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
            }
        }
        let mut poly = Self::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            poly = &(&poly * &Self::linear_root(nodes[i].clone())) + &Self::constant(dd[i].clone());
        }
        poly
    }
}

fn normalize_positive(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return p.clone();
    }
    let lc = p.leading().abs();
    p.scale(&(Q::one() / lc))
}

fn clear_denominators(coeffs: &[Q]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

/// Splits a finite double into `m·2^e` with integer `m`.
fn decompose(t: f64) -> (i64, i32) {
    if t == 0.0 {
        return (0, 0);
    }
    let bits = t.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exponent = ((bits >> 52) & 0x7ff) as i32;
    let mantissa = if exponent == 0 {
        (bits & 0xf_ffff_ffff_ffff) << 1
    } else {
        (bits & 0xf_ffff_ffff_ffff) | 0x10_0000_0000_0000
    };
    let mut m = mantissa as i64;
    let mut e = exponent - 1075;
    while m & 1 == 0 {
        m >>= 1;
        e += 1;
    }
    (sign * m, e)
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sgn, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sgn == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sgn} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*t")?,
                _ => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Q::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{q, qi};
    use super::*;

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = UniPoly::new(vec![qi(1), qi(2), qi(0), qi(0)]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.leading(), qi(2));
        assert!(UniPoly::new(vec![qi(0)]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = UniPoly::from_i64(&[2, -3, 1]);
        let b = UniPoly::from_i64(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), UniPoly::from_i64(&[-1, 1]));
        let (quot, rem) = a.div_rem(&UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(quot, UniPoly::from_i64(&[-2, 1]));
        assert!(rem.is_zero());
        assert!(a.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn yun_factorisation() {
        // (t-1)^2 (t+2)^3 t
        let f1 = UniPoly::from_i64(&[-1, 1]);
        let f2 = UniPoly::from_i64(&[2, 1]);
        let t = UniPoly::from_i64(&[0, 1]);
        let p = &(&(&f1 * &f1) * &(&(&f2 * &f2) * &f2)) * &t;
        let dec = p.square_free_decomposition();
        assert_eq!(dec, vec![(t.clone(), 1), (f1.clone(), 2), (f2.clone(), 3)]);
        assert_eq!(p.square_free_part(), &(&f1 * &f2) * &t);
    }

    #[test]
    fn exact_sign_resolves_cancellation() {
        // (t - 0.1)^2 with 0.1 as its binary double: exactly zero there
        let r = q_from_f64(0.1);
        let lin = UniPoly::linear_root(r);
        let p = &lin * &lin;
        assert_eq!(p.sign_at(0.1), 0);
        assert_eq!(p.sign_at(0.1 + 1e-17_f64.max(f64::EPSILON * 0.1)), 1);
        // t^2 - 2 around sqrt(2)
        let s = UniPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(s.sign_at(std::f64::consts::SQRT_2), 1);
        // the next float down
        assert_eq!(s.sign_at(f64::from_bits(std::f64::consts::SQRT_2.to_bits() - 1)), -1);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![q(1, 3), qi(-2), qi(0), q(5, 7)]);
        let nodes: Vec<Q> = (0..4).map(qi).collect();
        let values: Vec<Q> = nodes.iter().map(|t| p.eval_exact(t)).collect();
        assert_eq!(UniPoly::interpolate(&nodes, &values), p);
    }

    #[test]
    fn sturm_counts_roots() {
        // (t-1)(t-2)(t-3)
        let p = UniPoly::from_i64(&[-6, 11, -6, 1]);
        let seq = p.sturm_sequence();
        let var = |t: f64| {
            let signs: Vec<i8> = seq.iter().map(|s| s.sign_at(t)).filter(|&s| s != 0).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        assert_eq!(var(0.0) - var(10.0), 3);
        assert_eq!(var(1.5) - var(2.5), 1);
    }

    #[test]
    fn decompose_is_exact() {
        for &t in &[1.0, -3.5, 0.1, 1e-300, 12345.678] {
            let (m, e) = decompose(t);
            assert_eq!(m as f64 * 2f64.powi(e), t);
        }
    }
}
