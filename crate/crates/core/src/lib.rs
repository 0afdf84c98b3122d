//! Exact determinants over the Gaussian integers and machine checks of the
//! Pell identities that follow from the tridiagonal matrix `N(n)`.
//!
//! * [`gaussint`]: the scalar ring Z[i].
//! * [`matrix`]: dense and tridiagonal matrices, blocks and minors.
//! * [`determinant`]: permutation, Bareiss and continuant engines, plus the
//!   generalized Laplace expansion.
//! * [`pell`]: the sequence, its determinant factorization, and identity
//!   verifiers.

pub mod determinant;
pub mod error;
pub mod gaussint;
pub mod matrix;
pub mod pell;

pub use error::{Error, Result};
pub use gaussint::{GaussInt, UnitPhase};
pub use matrix::{DenseMatrix, IndexSet, TridiagSpec};
