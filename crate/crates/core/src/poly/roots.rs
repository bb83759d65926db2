//! Real-root isolation by Sturm sequences and safeguarded Newton refinement.
//!
//! Brackets are half-open `(lo, hi]` with floating-point endpoints; every sign
//! used for a decision is exact.

use super::uni::UniPoly;
use super::PolyError;

/// An interval `(lo, hi]` holding exactly one distinct root of `factor`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub sign_lo: i8,
    pub sign_hi: i8,
    /// Multiplicity of the root in the original polynomial.
    pub multiplicity: usize,
    /// Square-free factor whose simple root is bracketed, when known.
    pub factor: Option<UniPoly>,
}

impl RootBracket {
    /// A bare bracket for `u`; signs are evaluated exactly.
    pub fn new(u: &UniPoly, lo: f64, hi: f64) -> Self {
        RootBracket { lo, hi, sign_lo: u.sign_at(lo), sign_hi: u.sign_at(hi), multiplicity: 1, factor: None }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

fn sign_variations(seq: &[UniPoly], t: f64) -> usize {
    let mut prev = 0i8;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(t);
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Every real root of `u` in `(lo, hi]`, one bracket per distinct root,
/// sorted by position. Roots of multiplicity `k > 1` are reported once with
/// `multiplicity = k`.
pub fn isolate_real_roots(u: &UniPoly, lo: f64, hi: f64) -> Result<Vec<RootBracket>, PolyError> {
    if u.is_zero() {
        return Err(PolyError::ZeroPolynomial("cannot isolate roots of the zero polynomial"));
    }
    if !(lo < hi) {
        return Err(PolyError::EmptyInterval { lo, hi });
    }
    let mut out = Vec::new();
    for (factor, mult) in u.square_free_decomposition() {
        // roots sitting exactly on `lo` are outside the interval
        let (f, _) = factor.deflate_root(lo);
        if f.degree() == 0 {
            continue;
        }
        let seq = f.sturm_sequence();
        let mut stack = vec![(lo, hi, sign_variations(&seq, lo), sign_variations(&seq, hi))];
        while let Some((a, b, va, vb)) = stack.pop() {
            let count = va.saturating_sub(vb);
            if count == 0 {
                continue;
            }
            if count == 1 {
                out.push(RootBracket {
                    lo: a,
                    hi: b,
                    sign_lo: f.sign_at(a),
                    sign_hi: f.sign_at(b),
                    multiplicity: mult,
                    factor: Some(f.clone()),
                });
                continue;
            }
            let mid = split_point(&f, a, b).ok_or(PolyError::Unresolvable(a))?;
            let vm = sign_variations(&seq, mid);
            stack.push((a, mid, va, vm));
            stack.push((mid, b, vm, vb));
        }
    }
    out.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    Ok(out)
}

/// A point strictly inside `(a, b)` where `f` is nonzero.
fn split_point(f: &UniPoly, a: f64, b: f64) -> Option<f64> {
    for frac in [0.5, 0.5 + 1.0 / 64.0, 0.5 - 1.0 / 64.0, 0.25, 0.75] {
        let m = a + (b - a) * frac;
        if m > a && m < b && f.sign_at(m) != 0 {
            return Some(m);
        }
    }
    None
}

/// Narrows an isolating bracket to width `tol` (or to adjacent doubles) and
/// returns the endpoint with the smaller residual.
///
/// Newton steps are taken from the current best point and accepted only if
/// they land inside the bracket; bisection is the fallback.
pub fn refine_root(u: &UniPoly, b: &RootBracket, tol: f64) -> Result<f64, PolyError> {
    let target = pick_target(u, b)?;
    let (mut lo, mut hi) = (b.lo, b.hi);
    let s_lo = target.sign_at(lo);
    let s_hi = target.sign_at(hi);
    if s_hi == 0 {
        return Ok(hi);
    }
    if s_lo == 0 {
        return Ok(lo);
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4000 {
        if hi - lo <= tol || next_up(lo) >= hi {
            break;
        }
        let (p, dp) = target.eval_with_derivative(x);
        let newton = x - p / dp;
        let mut c = if newton.is_finite() && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if c <= lo || c >= hi {
            c = lo + 0.5 * (hi - lo);
            if c <= lo || c >= hi {
                break;
            }
        }
        let s = target.sign_at(c);
        if s == 0 {
            return Ok(c);
        }
        if s == s_lo {
            lo = c;
        } else {
            hi = c;
        }
        // once Newton has converged, probe a tolerance-sized bracket around it
        if (c - x).abs() < tol {
            let half = 0.5 * tol;
            let (pl, ph) = ((c - half).max(lo), (c + half).min(hi));
            if pl > lo && target.sign_at(pl) == s_lo {
                lo = pl;
            }
            if ph < hi && target.sign_at(ph) != s_lo && target.sign_at(ph) != 0 {
                hi = ph;
            }
        }
        x = c;
    }
    // an exactly representable root a few ulps inside the bracket
    let mut c = next_up(lo);
    for _ in 0..8 {
        if c >= hi {
            break;
        }
        if target.sign_at(c) == 0 {
            return Ok(c);
        }
        c = next_up(c);
    }
    Ok(if target.eval(lo).abs() <= target.eval(hi).abs() { lo } else { hi })
}

fn pick_target(u: &UniPoly, b: &RootBracket) -> Result<UniPoly, PolyError> {
    let bad = || PolyError::NonIsolatingBracket { lo: b.lo, hi: b.hi };
    if !(b.lo < b.hi) {
        return Err(bad());
    }
    let changes = |p: &UniPoly| {
        let (a, c) = (p.sign_at(b.lo), p.sign_at(b.hi));
        a * c < 0 || (c == 0 && a != 0)
    };
    if changes(u) {
        return Ok(u.clone());
    }
    match &b.factor {
        Some(f) if changes(f) => Ok(f.clone()),
        _ => Err(bad()),
    }
}

fn next_up(t: f64) -> f64 {
    if t == 0.0 {
        return f64::MIN_POSITIVE * f64::EPSILON;
    }
    let bits = t.to_bits();
    f64::from_bits(if t > 0.0 { bits + 1 } else { bits - 1 })
}
