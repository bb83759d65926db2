//! Dense bivariate polynomials `Σ c[i][j] x^i y^j` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{to_f64, Q};
use super::uni::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Bivariate polynomial stored as a rectangular coefficient matrix, row `i`
/// holding the coefficients of `x^i`. The matrix is trimmed so that
/// `degx`/`degy` are the true partial degrees.
#[derive(Clone)]
pub struct BiPoly {
    coeffs: Vec<Vec<Q>>,
    approx: Vec<Vec<f64>>,
}

impl BiPoly {
    /// Builds from a possibly ragged matrix `c[i][j]`.
    pub fn new(rows: Vec<Vec<Q>>) -> Self {
        let mut degx = None;
        let mut degy = None;
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    degx = Some(degx.map_or(i, |d: usize| d.max(i)));
                    degy = Some(degy.map_or(j, |d: usize| d.max(j)));
                }
            }
        }
        let (Some(dx), Some(dy)) = (degx, degy) else {
            return BiPoly { coeffs: Vec::new(), approx: Vec::new() };
        };
        let coeffs: Vec<Vec<Q>> = (0..=dx)
            .map(|i| (0..=dy).map(|j| rows.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(Q::zero)).collect())
            .collect();
        let approx = coeffs.iter().map(|r| r.iter().map(to_f64).collect()).collect();
        BiPoly { coeffs, approx }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![vec![c]])
    }

    /// Single monomial `c·x^i·y^j`.
    pub fn monomial(c: Q, i: usize, j: usize) -> Self {
        let mut rows = vec![vec![Q::zero(); j + 1]; i + 1];
        rows[i][j] = c;
        Self::new(rows)
    }

    pub fn x() -> Self {
        Self::monomial(Q::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Q::one(), 0, 1)
    }

    /// `f(x)` lifted to two variables.
    pub fn from_x(f: &UniPoly) -> Self {
        Self::new(f.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    /// `g(y)` lifted to two variables.
    pub fn from_y(g: &UniPoly) -> Self {
        Self::new(vec![g.coeffs().to_vec()])
    }

    /// Separable difference `f(x) − g(y)`.
    pub fn separable(f: &UniPoly, g: &UniPoly) -> Self {
        &Self::from_x(f) - &Self::from_y(g)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degx(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn degy(&self) -> usize {
        self.coeffs.first().map_or(0, |r| r.len() - 1)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize, j: usize) -> Q {
        self.coeffs.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff_matrix(&self) -> &[Vec<Q>] {
        &self.coeffs
    }

    /// Nonzero terms as `(i, j, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(j, c)| (i, j, c)))
    }

    /// Float evaluation: each row is reduced by Horner in `y`, then the row
    /// values are combined by Horner in `x`.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.approx
            .iter()
            .rev()
            .fold(0.0, |acc, row| acc * x + row.iter().rev().fold(0.0, |a, &c| a * y + c))
    }

    pub fn eval_exact(&self, x: &Q, y: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, row| acc * x + row.iter().rev().fold(Q::zero(), |a, c| a * y + c))
    }

    /// Largest `|c[i][j] x^i y^j|` at the point, the natural scale for
    /// residual tests.
    pub fn max_monomial(&self, x: f64, y: f64) -> f64 {
        let mut best = 0.0_f64;
        for (i, row) in self.approx.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                best = best.max((c * x.powi(i as i32) * y.powi(j as i32)).abs());
            }
        }
        best
    }

    pub fn partial(&self, var: Var) -> Self {
        let rows = match var {
            Var::X => self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, r)| r.iter().map(|c| c * Q::from_integer(BigInt::from(i))).collect())
                .collect(),
            Var::Y => self
                .coeffs
                .iter()
                .map(|r| r.iter().enumerate().skip(1).map(|(j, c)| c * Q::from_integer(BigInt::from(j))).collect())
                .collect(),
        };
        Self::new(rows)
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|r| r.iter().map(|c| c * s).collect()).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Q::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x := u(x,y)` and `y := v(x,y)`.
    pub fn compose(&self, u: &BiPoly, v: &BiPoly) -> Self {
        let vpows: Vec<BiPoly> = {
            let mut p = vec![Self::constant(Q::one())];
            for _ in 0..self.degy() {
                let next = p.last().unwrap() * v;
                p.push(next);
            }
            p
        };
        let mut acc = Self::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = Self::zero();
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    inner = &inner + &vpows[j].scale(c);
                }
            }
            acc = &(&acc * u) + &inner;
        }
        acc
    }

    /// `p(t, 0)` as a polynomial in `t`.
    pub fn on_x_axis(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|r| r[0].clone()).collect())
    }

    /// `p(0, t)` as a polynomial in `t`.
    pub fn on_y_axis(&self) -> UniPoly {
        UniPoly::new(self.coeffs.first().cloned().unwrap_or_default())
    }

    /// Coefficients of `x^0, x^1, …` as polynomials in `y`.
    pub fn x_coeffs_in_y(&self) -> Vec<UniPoly> {
        self.coeffs.iter().map(|r| UniPoly::new(r.clone())).collect()
    }

    /// `p(x, y₀)` as a polynomial in `x`.
    pub fn at_y(&self, y0: &Q) -> UniPoly {
        UniPoly::new(self.x_coeffs_in_y().iter().map(|c| c.eval_exact(y0)).collect())
    }

    /// True when no monomial mixes `x` and `y`.
    pub fn is_separable(&self) -> bool {
        self.terms().all(|(i, j, _)| i == 0 || j == 0)
    }
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(usize, usize, &Q)> = self.terms().collect();
        terms.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let nx = self.coeffs.len().max(rhs.coeffs.len());
        let ny = (self.degy() + 1).max(rhs.degy() + 1);
        BiPoly::new(
            (0..nx)
                .map(|i| (0..ny).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect())
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|r| r.iter().map(|c| -c).collect()).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![vec![Q::zero(); self.degy() + rhs.degy() + 1]; self.degx() + rhs.degx() + 1];
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in rhs.terms() {
                out[i1 + i2][j1 + j2] += a * b;
            }
        }
        BiPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{q, qi};
    use super::*;

    fn xy_poly() -> BiPoly {
        // x^2 - y
        &BiPoly::x().pow(2) - &BiPoly::y()
    }

    #[test]
    fn evaluates_monomial_sum() {
        assert_eq!(xy_poly().eval(2.0, 1.0), 3.0);
        assert_eq!(xy_poly().eval_exact(&qi(2), &qi(1)), qi(3));
        assert_eq!(xy_poly().degx(), 2);
        assert_eq!(xy_poly().degy(), 1);
    }

    #[test]
    fn partial_derivatives() {
        let x2y = BiPoly::monomial(qi(1), 2, 1);
        assert_eq!(x2y.partial(Var::X), BiPoly::monomial(qi(2), 1, 1));
        assert!(BiPoly::constant(qi(7)).partial(Var::Y).is_zero());
    }

    #[test]
    fn compose_and_axes() {
        // p(u, v) with u = x + 1, v = 2y
        let p = xy_poly();
        let u = &BiPoly::x() + &BiPoly::constant(qi(1));
        let v = BiPoly::y().scale(&qi(2));
        let c = p.compose(&u, &v);
        assert_eq!(c.eval(0.5, 0.25), 1.5 * 1.5 - 0.5);
        assert_eq!(c.on_x_axis(), UniPoly::from_i64(&[1, 2, 1]));
        assert_eq!(c.on_y_axis(), UniPoly::from_i64(&[1, -2]));
    }

    #[test]
    fn separable_detection() {
        let f = UniPoly::new(vec![qi(0), qi(0), q(1, 2)]);
        let g = UniPoly::new(vec![qi(0), qi(3)]);
        let s = BiPoly::separable(&f, &g);
        assert!(s.is_separable());
        assert_eq!(s.eval(2.0, 1.0), 2.0 - 3.0);
        assert!(!xy_poly().compose(&(&BiPoly::x() + &BiPoly::y()), &BiPoly::y()).is_separable());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(xy_poly().to_string(), "x^2 - y");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }
}
