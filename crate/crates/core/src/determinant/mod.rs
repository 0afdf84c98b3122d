//! Exact determinant engines.
//!
//! Three independent routes compute the same value:
//!
//! * [`det_permutation`]: the Leibniz sum over all permutations, used as an
//!   oracle for small matrices.
//! * [`det_bareiss`]: fraction-free elimination; every intermediate division
//!   is exact in Z[i].
//! * [`det_continuant`]: the three-term recurrence for tridiagonal matrices,
//!   linear in the order.
//!
//! [`laplace_expand`] evaluates the generalized (multi-row) Laplace expansion
//! and reports every term, so proof traces can be inspected term by term.
//!
//! The empty `0×0` matrix has determinant 1 throughout.

mod bareiss;
mod continuant;
mod laplace;
mod permutation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bareiss::det_bareiss;
pub use continuant::{continuant_sequence, continuants, det_continuant};
pub use laplace::{
    binomial, generalized_cofactor, laplace_expand, laplace_expand_with, ExpansionOptions, ExpansionTerm,
    RowExpansion, DEFAULT_MAX_EXPANSION, MAX_EXPANSION_ENV,
};
pub use permutation::{det_permutation, PERMUTATION_MAX_ORDER};

use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::matrix::{DenseMatrix, IndexSet, TridiagSpec};

/// Determinant engine selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetEngine {
    Permutation,
    Bareiss,
    Continuant,
    /// First-row Laplace expansion with Bareiss cofactors.
    Laplace,
}

impl DetEngine {
    pub const ALL: [DetEngine; 4] = [
        DetEngine::Permutation,
        DetEngine::Bareiss,
        DetEngine::Continuant,
        DetEngine::Laplace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetEngine::Permutation => "permutation",
            DetEngine::Bareiss => "bareiss",
            DetEngine::Continuant => "continuant",
            DetEngine::Laplace => "laplace",
        }
    }
}

impl fmt::Display for DetEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetEngine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DetEngine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Determinant of a dense matrix with the chosen engine. The continuant
/// engine falls back to an error unless the matrix is tridiagonal.
pub fn det_with(a: &DenseMatrix, engine: DetEngine) -> Result<GaussInt> {
    match engine {
        DetEngine::Permutation => det_permutation(a),
        DetEngine::Bareiss => det_bareiss(a),
        DetEngine::Continuant => {
            let spec = TridiagSpec::from_dense(a)?.ok_or(Error::NotTridiagonal)?;
            Ok(det_continuant(&spec))
        }
        DetEngine::Laplace => {
            a.order()?;
            let opts = ExpansionOptions {
                include_zero_blocks: false,
                max_terms: u128::MAX,
            };
            Ok(laplace_expand_with(a, &IndexSet::range(1, 1), &opts)?.total)
        }
    }
}
