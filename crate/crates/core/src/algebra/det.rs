//! Fraction-free determinant evaluation over Q[s].
//!
//! Bareiss elimination keeps every intermediate value inside the ring
//! (each is itself a minor of the input), so no rational-function
//! arithmetic ever appears and the cost stays polynomial in the size.

use crate::algebra::spoly::SPoly;
use crate::error::Error;

/// Exact determinant of a square matrix with entries in Q[s].
///
/// The empty matrix has determinant 1 (the empty-product convention used
/// for the degree-zero Gram determinant). A zero determinant is a valid
/// return, not an error.
pub fn det_fraction_free(matrix: &[Vec<SPoly>]) -> Result<SPoly, Error> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument(
            "determinant requires a square matrix".into(),
        ));
    }
    if n == 0 {
        return Ok(SPoly::one());
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = SPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(SPoly::zero());
            };
            m.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss pivots divide exactly");
            }
            m[i][k] = SPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}
