//! Sparse linear algebra over the two-element field.
//!
//! Matrices are stored column-major: each column is a sorted list of the row
//! indices holding a 1. Column addition is a symmetric difference of two
//! sorted lists, which is the only hot operation in boundary reduction.
//!
//! Reduction follows the left-to-right column algorithm familiar from
//! persistent homology: the pivot of a column is its largest row index, and
//! a column is reduced by adding earlier columns with the same pivot until
//! its pivot is fresh or it vanishes. The order is fixed, so kernel bases and
//! homology representatives are reproducible.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) is outside a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("index {index} is outside a vector of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `a ^= b` for sorted, duplicate-free index lists.
pub fn xor_into(a: &mut Vec<usize>, b: &[usize]) {
    if b.is_empty() {
        return;
    }
    if a.is_empty() {
        a.extend_from_slice(b);
        return;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => {
                out.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    *a = out;
}

/// Sorts and cancels repeated indices in pairs.
fn normalize(mut indices: Vec<usize>) -> Vec<usize> {
    indices.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(indices.len());
    for idx in indices {
        if out.last() == Some(&idx) {
            out.pop();
        } else {
            out.push(idx);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    dim: usize,
    support: Vec<usize>,
}

impl F2Vector {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            support: Vec::new(),
        }
    }

    pub fn unit(dim: usize, index: usize) -> Result<Self, LinalgError> {
        Self::from_indices(dim, [index])
    }

    /// Builds a vector from indices; an index listed twice cancels.
    pub fn from_indices(
        dim: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, LinalgError> {
        let support = normalize(indices.into_iter().collect());
        if let Some(&index) = support.last() {
            if index >= dim {
                return Err(LinalgError::IndexOutOfRange { index, dim });
            }
        }
        Ok(Self { dim, support })
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, support: Vec<usize>) -> Self {
        debug_assert!(support.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(support.last().is_none_or(|&i| i < dim));
        Self { dim, support }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn add_assign(&mut self, other: &F2Vector) -> Result<(), LinalgError> {
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        xor_into(&mut self.support, &other.support);
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(dim={}, {:?})", self.dim, self.support)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<usize>>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from `(row, col)` positions; a repeated position
    /// cancels.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, LinalgError> {
        let mut columns = vec![Vec::new(); cols];
        for (row, col) in entries {
            if row >= rows || col >= cols {
                return Err(LinalgError::OutOfBounds {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            columns[col].push(row);
        }
        let columns = columns.into_iter().map(normalize).collect();
        Ok(Self {
            rows,
            cols,
            columns,
        })
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<usize>>) -> Result<Self, LinalgError> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for (col, column) in columns.into_iter().enumerate() {
            let column = normalize(column);
            if let Some(&row) = column.last() {
                if row >= rows {
                    return Err(LinalgError::OutOfBounds {
                        row,
                        col,
                        rows,
                        cols,
                    });
                }
            }
            out.push(column);
        }
        Ok(Self {
            rows,
            cols,
            columns: out,
        })
    }

    pub fn from_vectors(rows: usize, vectors: &[F2Vector]) -> Result<Self, LinalgError> {
        let mut columns = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.dim != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: v.dim,
                });
            }
            columns.push(v.support.clone());
        }
        Ok(Self {
            rows,
            cols: vectors.len(),
            columns,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, col: usize) -> &[usize] {
        &self.columns[col]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.columns[col].binary_search(&row).is_ok()
    }

    pub fn toggle(&mut self, row: usize, col: usize) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let column = &mut self.columns[col];
        match column.binary_search(&row) {
            Ok(pos) => {
                column.remove(pos);
            }
            Err(pos) => column.insert(pos, row),
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, rows)| rows.iter().map(move |&r| (r, c)))
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (r, c) in self.entries() {
            columns[r].push(c);
        }
        // entries() walks columns in order, so each new column is sorted
        Self {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector, LinalgError> {
        if v.dim != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.dim,
            });
        }
        let mut acc = Vec::new();
        for &c in &v.support {
            xor_into(&mut acc, &self.columns[c]);
        }
        Ok(F2Vector::from_sorted_unchecked(self.rows, acc))
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F2Matrix({}x{}, nnz={})",
            self.rows,
            self.cols,
            self.nnz()
        )
    }
}

/// Result of column-reducing a matrix `D` into `R = D V`.
#[derive(Debug, Clone)]
pub struct Reduction {
    rows: usize,
    reduced: Vec<Vec<usize>>,
    transform: Option<Vec<Vec<usize>>>,
    /// For each row index, the column whose pivot sits there.
    pivot_col: Vec<Option<usize>>,
    cleared: Vec<bool>,
    rank: usize,
}

impl Reduction {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.reduced.len()
    }

    /// Pivot row of a reduced column, if the column is nonzero.
    pub fn pivot(&self, col: usize) -> Option<usize> {
        self.reduced[col].last().copied()
    }

    pub fn column_with_pivot(&self, row: usize) -> Option<usize> {
        self.pivot_col[row]
    }

    pub fn reduced_column(&self, col: usize) -> &[usize] {
        &self.reduced[col]
    }

    /// Column of `V`; `None` when no transform was tracked or the column was
    /// skipped by clearing.
    pub fn transform_column(&self, col: usize) -> Option<&[usize]> {
        if self.cleared[col] {
            return None;
        }
        self.transform.as_ref().map(|t| t[col].as_slice())
    }

    pub fn is_cleared(&self, col: usize) -> bool {
        self.cleared[col]
    }

    /// Columns that reduced to zero without being cleared.
    pub fn zero_columns(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.reduced.len()).filter(|&c| !self.cleared[c] && self.reduced[c].is_empty())
    }

    /// Reduces `v` (sorted row indices) against the pivots in place, from the
    /// highest index down. Afterwards `v` holds no pivot row, and it is empty
    /// iff the input lay in the column space.
    pub fn reduce_in_place(&self, v: &mut Vec<usize>) {
        // Adding a column with pivot p only touches rows <= p, so walking the
        // support from the top downwards terminates.
        let mut cursor = v.len();
        while cursor > 0 {
            let row = v[cursor - 1];
            if let Some(col) = self.pivot_col.get(row).copied().flatten() {
                xor_into(v, &self.reduced[col]);
                cursor = v.partition_point(|&r| r < row);
            } else {
                cursor -= 1;
            }
        }
    }

    pub fn in_column_space(&self, v: &[usize]) -> bool {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v.is_empty()
    }
}

/// Column-reduces `m`. With `track`, also records `V` such that `R = m V`.
pub fn reduce(m: &F2Matrix, track: bool) -> Reduction {
    reduce_with_clearing(m, track, &[])
}

/// As [`reduce`], but columns flagged in `clear` are known to reduce to zero
/// and are skipped outright.
pub fn reduce_with_clearing(m: &F2Matrix, track: bool, clear: &[bool]) -> Reduction {
    let cols = m.cols;
    let mut cleared = vec![false; cols];
    for (c, &flag) in clear.iter().enumerate().take(cols) {
        cleared[c] = flag;
    }
    let mut reduced: Vec<Vec<usize>> = Vec::with_capacity(cols);
    let mut transform: Option<Vec<Vec<usize>>> = track.then(|| Vec::with_capacity(cols));
    let mut pivot_col: Vec<Option<usize>> = vec![None; m.rows];
    let mut rank = 0;

    for (j, &is_cleared) in cleared.iter().enumerate() {
        if is_cleared {
            reduced.push(Vec::new());
            if let Some(t) = transform.as_mut() {
                t.push(Vec::new());
            }
            continue;
        }
        let mut col = m.columns[j].clone();
        let mut v = if track { vec![j] } else { Vec::new() };
        while let Some(&low) = col.last() {
            match pivot_col[low] {
                Some(p) => {
                    xor_into(&mut col, &reduced[p]);
                    if let Some(t) = transform.as_ref() {
                        xor_into(&mut v, &t[p]);
                    }
                }
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            pivot_col[low] = Some(j);
            rank += 1;
        }
        reduced.push(col);
        if let Some(t) = transform.as_mut() {
            t.push(v);
        }
    }

    Reduction {
        rows: m.rows,
        reduced,
        transform,
        pivot_col,
        cleared,
        rank,
    }
}

pub fn rank(m: &F2Matrix) -> usize {
    reduce(m, false).rank
}

/// A basis of the null space; it has `cols - rank` elements.
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    let red = reduce(m, true);
    red.zero_columns()
        .map(|c| {
            let v = red.transform_column(c).expect("tracked").to_vec();
            F2Vector::from_sorted_unchecked(m.cols, v)
        })
        .collect()
}

pub fn in_span(v: &F2Vector, basis: &[F2Vector]) -> Result<bool, LinalgError> {
    let m = F2Matrix::from_vectors(v.dim, basis)?;
    Ok(reduce(&m, false).in_column_space(&v.support))
}
