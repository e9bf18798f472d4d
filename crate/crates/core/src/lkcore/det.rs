use super::{LkError, SparseEndo};
use crate::laurent::LaurentPoly;

/// Exact determinant by fraction-free (Bareiss) elimination. Pivots are
/// chosen with the fewest terms to keep intermediate entries small.
pub fn det(e: &SparseEndo<LaurentPoly>) -> Result<LaurentPoly, LkError> {
    if !e.is_complete() || !e.all_exact() {
        return Err(LkError::TruncatedTable);
    }
    Ok(det_dense(e.dense()))
}

pub fn det_dense(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n {
        let piv = (k..n).filter(|&r| !m[r][k].is_zero()).min_by_key(|&r| m[r][k].term_count());
        let Some(piv) = piv else {
            return LaurentPoly::zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                // Row i is only rescaled by the pivot.
                for j in k + 1..n {
                    if !m[i][j].is_zero() {
                        m[i][j] = (&m[i][j] * &m[k][k]).exact_div(&prev).expect("Bareiss division is exact");
                    }
                }
                continue;
            }
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if v.is_zero() { v } else { v.exact_div(&prev).expect("Bareiss division is exact") };
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
