use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::matrix::DenseMatrix;

/// Largest order the Leibniz oracle accepts (9! terms).
pub const PERMUTATION_MAX_ORDER: usize = 9;

fn is_odd(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 1
}

/// Leibniz formula: `Σ_σ sgn(σ) Π_k a[k][σ(k)]`.
pub fn det_permutation(a: &DenseMatrix) -> Result<GaussInt> {
    let n = a.order()?;
    if n > PERMUTATION_MAX_ORDER {
        return Err(Error::TooLargeForOracle {
            n,
            max: PERMUTATION_MAX_ORDER,
        });
    }
    let mut total = GaussInt::zero();
    for perm in (0..n).permutations(n) {
        let mut term = GaussInt::one();
        for (row, &col) in perm.iter().enumerate() {
            let entry = a.get(row, col);
            if entry.is_zero() {
                term = GaussInt::zero();
                break;
            }
            term *= entry;
        }
        if term.is_zero() {
            continue;
        }
        if is_odd(&perm) {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}
