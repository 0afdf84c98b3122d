//! Dense and tridiagonal Gaussian-integer matrices, with submatrix and
//! complementary-minor extraction.
//!
//! Row and column selections ([`IndexSet`]) are 1-based, so `A([1,2],[1,3])`
//! is written `IndexSet::new(vec![1, 2])` / `IndexSet::new(vec![1, 3])`.
//! Element access through [`DenseMatrix::get`] and `Index` is 0-based.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gaussint::{GaussInt, UnitPhase};

/// A strictly increasing, non-empty list of 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if indices.is_empty() || indices[0] == 0 || !increasing {
            return Err(Error::InvalidIndexSet(indices));
        }
        Ok(IndexSet(indices))
    }

    /// `first..=last`; panics if the range is empty or starts at 0.
    pub fn range(first: usize, last: usize) -> Self {
        Self::new((first..=last).collect()).expect("non-empty 1-based range")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("index sets are non-empty")
    }

    pub fn check_within(&self, bound: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i > bound) {
            Some(&index) => Err(Error::IndexOutOfRange { index, bound }),
            None => Ok(()),
        }
    }

    /// 0-based positions in `1..=n` not in this set, ascending.
    pub(crate) fn complement_zero_based(&self, n: usize) -> Vec<usize> {
        let mut chosen = self.0.iter().peekable();
        (1..=n)
            .filter(|i| {
                if chosen.peek() == Some(&i) {
                    chosen.next();
                    false
                } else {
                    true
                }
            })
            .map(|i| i - 1)
            .collect()
    }

    fn zero_based(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|i| i - 1)
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// Parses `"1,2,3"` (whitespace tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let indices = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        IndexSet::new(indices)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (p, i) in self.0.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        IndexSet::new(v).map_err(serde::de::Error::custom)
    }
}

/// Row-major dense matrix over Z[i].
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussInt>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension);
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<GaussInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                rows: r,
                cols: c,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussInt) -> Result<Self> {
        let entries = (0..rows * cols).map(|p| f(p / cols, p % cols)).collect();
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |r, c| if r == c { GaussInt::one() } else { GaussInt::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length, or `NotSquare`.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[GaussInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GaussInt> {
        self.entries
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &GaussInt {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[GaussInt] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussInt>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Swaps two rows, 0-based.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.entries.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// The `k×k` block `A(rows, cols)`.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<DenseMatrix> {
        if rows.len() != cols.len() {
            return Err(Error::UnequalSelection {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        rows.check_within(self.rows)?;
        cols.check_within(self.cols)?;
        let cs: Vec<usize> = cols.zero_based().collect();
        let entries = rows
            .zero_based()
            .flat_map(|r| cs.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        DenseMatrix::new(rows.len(), cols.len(), entries)
    }

    /// The minor matrix `M(rows, cols)` left after deleting the selected rows
    /// and columns. A selection of every row is rejected with `FullSelection`;
    /// its minor is the empty matrix, whose determinant is taken to be 1.
    pub fn complementary_minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<DenseMatrix> {
        let n = self.order()?;
        if rows.len() != cols.len() {
            return Err(Error::UnequalSelection {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        rows.check_within(n)?;
        cols.check_within(n)?;
        if rows.len() == n {
            return Err(Error::FullSelection(n));
        }
        let keep_rows = rows.complement_zero_based(n);
        let keep_cols = cols.complement_zero_based(n);
        let entries = keep_rows
            .iter()
            .flat_map(|&r| keep_cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        DenseMatrix::new(keep_rows.len(), keep_cols.len(), entries)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = GaussInt;

    fn index(&self, (row, col): (usize, usize)) -> &GaussInt {
        self.get(row, col)
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for DenseMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DenseMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussInt>>::deserialize(d)?;
        DenseMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// A tridiagonal matrix given by its three bands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TridiagSpec {
    diag: Vec<GaussInt>,
    sub: Vec<GaussInt>,
    sup: Vec<GaussInt>,
}

impl TridiagSpec {
    /// `sub[k]` sits at 0-based `(k+1, k)`, `sup[k]` at `(k, k+1)`.
    pub fn new(diag: Vec<GaussInt>, sub: Vec<GaussInt>, sup: Vec<GaussInt>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::ShapeMismatch {
                rows: n,
                cols: n,
                len: n + sub.len() + sup.len(),
            });
        }
        Ok(Self { diag, sub, sup })
    }

    /// Constant bands.
    pub fn uniform(n: usize, diag: GaussInt, sub: GaussInt, sup: GaussInt) -> Result<Self> {
        let off = n.saturating_sub(1);
        Self::new(vec![diag; n], vec![sub; off], vec![sup; off])
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[GaussInt] {
        &self.diag
    }

    pub fn sub(&self) -> &[GaussInt] {
        &self.sub
    }

    pub fn sup(&self) -> &[GaussInt] {
        &self.sup
    }

    /// Reads the bands of a square matrix; `None` if anything lies outside
    /// them.
    pub fn from_dense(a: &DenseMatrix) -> Result<Option<Self>> {
        let n = a.order()?;
        for r in 0..n {
            for c in 0..n {
                if r.abs_diff(c) > 1 && !a.get(r, c).is_zero() {
                    return Ok(None);
                }
            }
        }
        let diag = (0..n).map(|k| a.get(k, k).clone()).collect();
        let sub = (1..n).map(|k| a.get(k, k - 1).clone()).collect();
        let sup = (1..n).map(|k| a.get(k - 1, k).clone()).collect();
        Self::new(diag, sub, sup).map(Some)
    }

    pub fn materialize(&self) -> DenseMatrix {
        let n = self.order();
        DenseMatrix::from_fn(n, n, |r, c| {
            if r == c {
                self.diag[r].clone()
            } else if r == c + 1 {
                self.sub[c].clone()
            } else if c == r + 1 {
                self.sup[r].clone()
            } else {
                GaussInt::zero()
            }
        })
        .expect("order is at least 1")
    }
}

/// The `n×n` matrix with `2i` on the diagonal and `1` on both off-diagonals.
pub fn build_pell_matrix(n: usize) -> Result<TridiagSpec> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    TridiagSpec::uniform(n, GaussInt::new(0, 2), GaussInt::one(), GaussInt::one())
}

/// `(-1)^(Σ rows + Σ cols)`.
pub fn cofactor_sign(rows: &IndexSet, cols: &IndexSet) -> Result<UnitPhase> {
    if rows.len() != cols.len() {
        return Err(Error::UnequalSelection {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    Ok(if (rows.sum() + cols.sum()).is_multiple_of(2) {
        UnitPhase::One
    } else {
        UnitPhase::MinusOne
    })
}
