//! Sylvester resultant with respect to `x`, computed exactly by evaluating the
//! Sylvester determinant at integer `y` nodes and interpolating.

use num_traits::{One, Zero};

use super::bi::BiPoly;
use super::rational::{qi, Q};
use super::uni::UniPoly;
use super::PolyError;

/// `Res_x(p, q)` as a polynomial in `y`, using the formal `x`-degrees of the
/// inputs for the Sylvester matrix.
pub fn resultant_x(p: &BiPoly, q: &BiPoly) -> Result<UniPoly, PolyError> {
    let (m, n) = (p.degx(), q.degx());
    if m == 0 && n == 0 {
        return Err(PolyError::NothingToEliminate);
    }
    let pc = p.x_coeffs_in_y();
    let qc = q.x_coeffs_in_y();
    if m == 0 {
        return Ok(upow(&pc.first().cloned().unwrap_or_else(UniPoly::zero), n));
    }
    if n == 0 {
        return Ok(upow(&qc.first().cloned().unwrap_or_else(UniPoly::zero), m));
    }
    let bound = m * q.degy() + n * p.degy();
    let nodes: Vec<Q> = (0..=bound as i64).map(qi).collect();
    let values: Vec<Q> = nodes
        .iter()
        .map(|y| {
            let a: Vec<Q> = pc.iter().map(|c| c.eval_exact(y)).collect();
            let b: Vec<Q> = qc.iter().map(|c| c.eval_exact(y)).collect();
            sylvester_det(&a, &b)
        })
        .collect();
    Ok(UniPoly::interpolate(&nodes, &values))
}

fn upow(p: &UniPoly, k: usize) -> UniPoly {
    (0..k).fold(UniPoly::constant(Q::one()), |acc, _| &acc * p)
}

/// Determinant of the Sylvester matrix of `a` (degree `m`) and `b` (degree
/// `n`), both given constant term first with their formal lengths.
fn sylvester_det(a: &[Q], b: &[Q]) -> Q {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![Q::zero(); size]; size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    determinant(mat)
}

fn determinant(mut mat: Vec<Vec<Q>>) -> Q {
    let size = mat.len();
    let mut det = Q::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let f = &mat[r][col] / &pv;
            #[allow(clippy::needless_range_loop)] // reads row col while writing row r
            for c in col..size {
                let delta = &f * &mat[col][c];
                mat[r][c] -= delta;
            }
        }
    }
    det
}
