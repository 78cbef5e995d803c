//! Compressed sparse row matrices.

use super::LinalgError;
use crate::num::Real;

/// Sparse matrix in compressed row form with sorted column indices.
#[derive(Clone, Debug)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<T>,
}

impl<T: Real> SparseMatrix<T> {
    /// Matrix with no stored entries.
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            row_offsets: vec![0; nrows + 1],
            col_indices: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Builds a matrix from (row, col, value) triplets. Duplicates are summed
    /// in their order of appearance; column indices end up sorted per row.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: &[(usize, usize, T)],
    ) -> Result<Self, LinalgError> {
        for &(r, c, _) in triplets {
            if r >= nrows || c >= ncols {
                return Err(LinalgError::IndexOutOfRange {
                    row: r,
                    col: c,
                    nrows,
                    ncols,
                });
            }
        }
        // Bucket by row, preserving input order inside each row so that
        // duplicate summation is deterministic.
        let mut counts = vec![0usize; nrows + 1];
        for &(r, _, _) in triplets {
            counts[r + 1] += 1;
        }
        for i in 0..nrows {
            counts[i + 1] += counts[i];
        }
        let mut order: Vec<usize> = vec![0; triplets.len()];
        let mut cursor = counts.clone();
        for (k, &(r, _, _)) in triplets.iter().enumerate() {
            order[cursor[r]] = k;
            cursor[r] += 1;
        }

        let mut row_offsets = Vec::with_capacity(nrows + 1);
        let mut col_indices = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        row_offsets.push(0);
        let mut scratch: Vec<usize> = Vec::new();
        for r in 0..nrows {
            scratch.clear();
            scratch.extend_from_slice(&order[counts[r]..counts[r + 1]]);
            // stable sort by column keeps input order among duplicates
            scratch.sort_by_key(|&k| triplets[k].1);
            let mut i = 0;
            while i < scratch.len() {
                let col = triplets[scratch[i]].1;
                let mut v = triplets[scratch[i]].2;
                let mut j = i + 1;
                while j < scratch.len() && triplets[scratch[j]].1 == col {
                    v += triplets[scratch[j]].2;
                    j += 1;
                }
                col_indices.push(col);
                values.push(v);
                i = j;
            }
            row_offsets.push(col_indices.len());
        }
        Ok(Self {
            nrows,
            ncols,
            row_offsets,
            col_indices,
            values,
        })
    }

    /// Builds a matrix directly from raw CSR arrays (callers guarantee that
    /// column indices are sorted and in range).
    pub(crate) fn from_raw(
        nrows: usize,
        ncols: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<T>,
    ) -> Self {
        debug_assert_eq!(row_offsets.len(), nrows + 1);
        debug_assert_eq!(*row_offsets.last().unwrap(), col_indices.len());
        debug_assert_eq!(col_indices.len(), values.len());
        Self {
            nrows,
            ncols,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.col_indices.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[T]) {
        let (lo, hi) = (self.row_offsets[i], self.row_offsets[i + 1]);
        (&self.col_indices[lo..hi], &self.values[lo..hi])
    }

    /// Stored value at (i, j), zero if the entry is not stored.
    pub fn get(&self, i: usize, j: usize) -> T {
        let (cols, vals) = self.row(i);
        match cols.binary_search(&j) {
            Ok(k) => vals[k],
            Err(_) => T::zero(),
        }
    }

    /// y = A x.
    pub fn matvec(&self, x: &[T], y: &mut [T]) {
        debug_assert_eq!(x.len(), self.ncols);
        debug_assert_eq!(y.len(), self.nrows);
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            let mut acc = T::zero();
            for (c, v) in cols.iter().zip(vals) {
                acc += *v * x[*c];
            }
            y[i] = acc;
        }
    }

    /// Allocating matrix-vector product.
    pub fn matvec_alloc(&self, x: &[T]) -> Vec<T> {
        let mut y = vec![T::zero(); self.nrows];
        self.matvec(x, &mut y);
        y
    }

    /// y = A^T x.
    pub fn matvec_transpose(&self, x: &[T], y: &mut [T]) {
        debug_assert_eq!(x.len(), self.nrows);
        debug_assert_eq!(y.len(), self.ncols);
        for v in y.iter_mut() {
            *v = T::zero();
        }
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            let xi = x[i];
            for (c, v) in cols.iter().zip(vals) {
                y[*c] += *v * xi;
            }
        }
    }

    /// Explicit transpose with sorted rows.
    pub fn transpose(&self) -> Self {
        let mut counts = vec![0usize; self.ncols + 1];
        for &c in &self.col_indices {
            counts[c + 1] += 1;
        }
        for i in 0..self.ncols {
            counts[i + 1] += counts[i];
        }
        let mut col_indices = vec![0usize; self.nnz()];
        let mut values = vec![T::zero(); self.nnz()];
        let mut cursor = counts.clone();
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                let k = cursor[*c];
                col_indices[k] = i;
                values[k] = *v;
                cursor[*c] += 1;
            }
        }
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            row_offsets: counts,
            col_indices,
            values,
        }
    }

    /// Gustavson row-by-row sparse product `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.ncols != other.nrows {
            return Err(LinalgError::DimMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let n = other.ncols;
        let mut acc = vec![T::zero(); n];
        let mut marker = vec![usize::MAX; n];
        let mut row_offsets = Vec::with_capacity(self.nrows + 1);
        let mut col_indices = Vec::new();
        let mut values = Vec::new();
        let mut pattern: Vec<usize> = Vec::new();
        row_offsets.push(0);
        for i in 0..self.nrows {
            pattern.clear();
            let (cols, vals) = self.row(i);
            for (k, a) in cols.iter().zip(vals) {
                let (bcols, bvals) = other.row(*k);
                for (j, b) in bcols.iter().zip(bvals) {
                    if marker[*j] != i {
                        marker[*j] = i;
                        acc[*j] = T::zero();
                        pattern.push(*j);
                    }
                    acc[*j] += *a * *b;
                }
            }
            pattern.sort_unstable();
            for &j in &pattern {
                col_indices.push(j);
                values.push(acc[j]);
            }
            row_offsets.push(col_indices.len());
        }
        Ok(Self {
            nrows: self.nrows,
            ncols: n,
            row_offsets,
            col_indices,
            values,
        })
    }

    /// self + alpha * other, pattern union.
    pub fn add_scaled(&self, alpha: T, other: &Self) -> Result<Self, LinalgError> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(LinalgError::DimMismatch(format!(
                "add: {}x{} plus {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut row_offsets = Vec::with_capacity(self.nrows + 1);
        let mut col_indices = Vec::new();
        let mut values = Vec::new();
        row_offsets.push(0);
        for i in 0..self.nrows {
            let (ac, av) = self.row(i);
            let (bc, bv) = other.row(i);
            let (mut p, mut q) = (0, 0);
            while p < ac.len() || q < bc.len() {
                let ca = if p < ac.len() { ac[p] } else { usize::MAX };
                let cb = if q < bc.len() { bc[q] } else { usize::MAX };
                if ca < cb {
                    col_indices.push(ca);
                    values.push(av[p]);
                    p += 1;
                } else if cb < ca {
                    col_indices.push(cb);
                    values.push(alpha * bv[q]);
                    q += 1;
                } else {
                    col_indices.push(ca);
                    values.push(av[p] + alpha * bv[q]);
                    p += 1;
                    q += 1;
                }
            }
            row_offsets.push(col_indices.len());
        }
        Ok(Self {
            nrows: self.nrows,
            ncols: self.ncols,
            row_offsets,
            col_indices,
            values,
        })
    }

    /// Verifies that every stored entry has an identical transpose entry.
    pub fn symmetry_audit(&self) -> Result<(), LinalgError> {
        if self.nrows != self.ncols {
            return Err(LinalgError::DimMismatch(format!(
                "symmetry audit on a {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                let (tcols, tvals) = self.row(*c);
                match tcols.binary_search(&i) {
                    Ok(k) if tvals[k] == *v => {}
                    _ => return Err(LinalgError::NotSymmetric { i, j: *c }),
                }
            }
        }
        Ok(())
    }

    /// Largest absolute stored value (zero for an empty matrix).
    pub fn max_abs(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |m, v| if v.abs() > m { v.abs() } else { m })
    }

    /// Dense copy, for the small-scale oracle paths.
    pub fn to_dense(&self) -> super::DenseMatrix<T> {
        let mut d = super::DenseMatrix::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                d.set(i, *c, *v);
            }
        }
        d
    }
}
