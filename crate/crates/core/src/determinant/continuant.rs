use num_traits::{One, Zero};

use crate::gaussint::GaussInt;
use crate::matrix::TridiagSpec;

/// Determinant of a tridiagonal matrix by the continuant recurrence
/// `D_k = d_k·D_{k-1} - sub_{k-1}·sup_{k-1}·D_{k-2}`, with `D_0 = 1`.
pub fn det_continuant(spec: &TridiagSpec) -> GaussInt {
    Continuants::new(spec).last().expect("order is at least 1")
}

/// All leading principal minors `D_1, …, D_n` of the matrix.
pub fn continuant_sequence(spec: &TridiagSpec) -> Vec<GaussInt> {
    Continuants::new(spec).collect()
}

/// Lazily yields `D_1, …, D_n`, holding only two values at a time.
pub fn continuants(spec: &TridiagSpec) -> impl Iterator<Item = GaussInt> + '_ {
    Continuants::new(spec)
}

struct Continuants<'a> {
    spec: &'a TridiagSpec,
    k: usize,
    before: GaussInt,
    current: GaussInt,
}

impl<'a> Continuants<'a> {
    fn new(spec: &'a TridiagSpec) -> Self {
        Self {
            spec,
            k: 0,
            before: GaussInt::zero(),
            current: GaussInt::one(),
        }
    }
}

impl Iterator for Continuants<'_> {
    type Item = GaussInt;

    fn next(&mut self) -> Option<GaussInt> {
        let k = self.k;
        if k >= self.spec.order() {
            return None;
        }
        let mut next = &self.spec.diag()[k] * &self.current;
        if k > 0 {
            let coupling = &self.spec.sub()[k - 1] * &self.spec.sup()[k - 1];
            if coupling.is_one() {
                next -= &self.before;
            } else if !coupling.is_zero() {
                next -= coupling * &self.before;
            }
        }
        self.before = std::mem::replace(&mut self.current, next);
        self.k += 1;
        Some(self.current.clone())
    }
}
