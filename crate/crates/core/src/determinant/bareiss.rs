use num_traits::{One, Zero};

use crate::error::Result;
use crate::gaussint::GaussInt;
use crate::matrix::DenseMatrix;

/// Fraction-free (Bareiss) elimination.
///
/// Step `k` replaces `a[i][j]` by `(a[k][k]·a[i][j] - a[i][k]·a[k][j]) / p`,
/// where `p` is the previous pivot. Sylvester's identity makes every such
/// quotient exact in Z[i]. Pivoting takes the first nonzero entry at or below
/// the diagonal and tracks the sign of each row swap.
pub fn det_bareiss(a: &DenseMatrix) -> Result<GaussInt> {
    let n = a.order()?;
    let mut m = a.to_rows();
    let mut prev = GaussInt::one();
    let mut negate = false;

    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(GaussInt::zero()),
            }
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        let prev_is_one = prev.is_one();
        for row in lower.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let updated = if factor.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    pivot * &row[j]
                } else {
                    pivot * &row[j] - &factor * &pivot_row[j]
                };
                row[j] = if prev_is_one {
                    updated
                } else {
                    updated
                        .div_exact(&prev)
                        .expect("Bareiss quotient is exact over an integral domain")
                };
            }
        }
        prev = pivot.clone();
    }

    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
