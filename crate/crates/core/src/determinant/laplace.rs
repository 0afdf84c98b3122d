//! Generalized Laplace expansion along a fixed set of rows.
//!
//! For a row set `I` of size `k`,
//! `det A = Σ_J det A(I, J) · Å(I, J)` over all `k`-subsets `J` of columns,
//! where `Å(I, J) = (-1)^(ΣI + ΣJ) · det M(I, J)` is the generalized cofactor.

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::det_bareiss;
use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::matrix::{cofactor_sign, DenseMatrix, IndexSet};

/// Environment variable overriding [`DEFAULT_MAX_EXPANSION`].
pub const MAX_EXPANSION_ENV: &str = "PELLMAT_MAX_EXPANSION";

/// Default cap on the number of column subsets, `2^20`.
pub const DEFAULT_MAX_EXPANSION: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionOptions {
    /// Keep terms whose block determinant is zero.
    pub include_zero_blocks: bool,
    /// Largest number of column subsets enumerated.
    pub max_terms: u128,
}

impl Default for ExpansionOptions {
    fn default() -> Self {
        Self {
            include_zero_blocks: false,
            max_terms: DEFAULT_MAX_EXPANSION,
        }
    }
}

impl ExpansionOptions {
    /// Defaults, with `max_terms` taken from `PELLMAT_MAX_EXPANSION` when it
    /// holds a valid integer.
    pub fn from_env() -> Self {
        let max_terms = std::env::var(MAX_EXPANSION_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_EXPANSION);
        Self {
            max_terms,
            ..Self::default()
        }
    }
}

/// One column subset `J` of the expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub cols: IndexSet,
    #[serde(rename = "block")]
    pub block_det: GaussInt,
    pub cofactor: GaussInt,
    #[serde(rename = "product")]
    pub signed_product: GaussInt,
}

/// All terms of an expansion along `row_set`, in lexicographic column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowExpansion {
    #[serde(rename = "rows")]
    pub row_set: IndexSet,
    pub terms: Vec<ExpansionTerm>,
    pub total: GaussInt,
}

impl RowExpansion {
    pub fn nonzero_blocks(&self) -> impl Iterator<Item = &ExpansionTerm> {
        self.terms.iter().filter(|t| !t.block_det.is_zero())
    }

    pub fn nonzero_products(&self) -> impl Iterator<Item = &ExpansionTerm> {
        self.terms.iter().filter(|t| !t.signed_product.is_zero())
    }

    pub fn term(&self, cols: &[usize]) -> Option<&ExpansionTerm> {
        self.terms.iter().find(|t| t.cols.as_slice() == cols)
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c·(n-i) is divisible by (i+1) at every step.
        c = match c.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// `(-1)^(ΣI + ΣJ) · det M(I, J)`. A full selection returns 1: the minor is
/// the empty matrix.
pub fn generalized_cofactor(a: &DenseMatrix, rows: &IndexSet, cols: &IndexSet) -> Result<GaussInt> {
    let n = a.order()?;
    let sign = cofactor_sign(rows, cols)?;
    rows.check_within(n)?;
    cols.check_within(n)?;
    if rows.len() == n {
        return Ok(sign.as_gauss());
    }
    let minor = a.complementary_minor(rows, cols)?;
    Ok(sign.apply(&det_bareiss(&minor)?))
}

pub fn laplace_expand(a: &DenseMatrix, row_set: &IndexSet) -> Result<RowExpansion> {
    laplace_expand_with(a, row_set, &ExpansionOptions::default())
}

/// Expands `det A` along `row_set`. Terms are evaluated in parallel and
/// returned in lexicographic order of their column sets.
///
/// The `max_terms` guard counts the column subsets actually enumerated: all
/// `C(n, k)` of them with `include_zero_blocks`, otherwise only subsets of the
/// columns that are nonzero somewhere on the selected rows.
pub fn laplace_expand_with(a: &DenseMatrix, row_set: &IndexSet, opts: &ExpansionOptions) -> Result<RowExpansion> {
    let n = a.order()?;
    row_set.check_within(n)?;
    let k = row_set.len();
    // A column that vanishes on every selected row makes any block using it
    // zero, so unless zero blocks are wanted only the other columns matter.
    let candidates: Vec<usize> = if opts.include_zero_blocks {
        (1..=n).collect()
    } else {
        (1..=n)
            .filter(|&c| row_set.as_slice().iter().any(|&r| !a.get(r - 1, c - 1).is_zero()))
            .collect()
    };
    let terms = binomial(candidates.len(), k);
    if terms > opts.max_terms {
        return Err(Error::ExpansionTooLarge {
            terms,
            limit: opts.max_terms,
        });
    }

    let column_sets: Vec<Vec<usize>> = candidates.into_iter().combinations(k).collect();
    let evaluated: Vec<Option<ExpansionTerm>> = column_sets
        .into_par_iter()
        .map(|cols| {
            let cols = IndexSet::new(cols).expect("combinations are strictly increasing");
            let block_det = det_bareiss(&a.submatrix(row_set, &cols)?)?;
            if block_det.is_zero() && !opts.include_zero_blocks {
                return Ok(None);
            }
            let cofactor = generalized_cofactor(a, row_set, &cols)?;
            let signed_product = if block_det.is_zero() {
                GaussInt::zero()
            } else if cofactor.is_one() {
                block_det.clone()
            } else {
                &block_det * &cofactor
            };
            Ok(Some(ExpansionTerm {
                cols,
                block_det,
                cofactor,
                signed_product,
            }))
        })
        .collect::<Result<_>>()?;

    let terms: Vec<ExpansionTerm> = evaluated.into_iter().flatten().collect();
    let total = terms.iter().map(|t| &t.signed_product).sum();
    Ok(RowExpansion {
        row_set: row_set.clone(),
        terms,
        total,
    })
}
