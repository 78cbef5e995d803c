//! Sparse LDL^T factorization with approximate-minimum-degree ordering.
//!
//! Up-looking factorization: a symbolic pass over the elimination tree
//! computes exact column counts, then each pivot row is obtained from a
//! sparse lower-triangular solve. The ordering comes from the `amd` crate
//! (a port of the SuiteSparse approximate minimum degree code).

use super::{LinalgError, SparseMatrix};
use crate::num::Real;

/// LDL^T factorization of a sparse SPD matrix.
///
/// `lower_factor` stores the strict lower triangle of the unit lower factor
/// L row-by-row; `diagonal` holds D. `permutation` maps factor positions to
/// original indices (new -> old).
#[derive(Clone, Debug)]
pub struct Factorization<T> {
    pub permutation: Vec<usize>,
    pub lower_factor: SparseMatrix<T>,
    pub diagonal: Vec<T>,
    inverse_permutation: Vec<usize>,
}

/// Factors a sparse SPD matrix (full symmetric storage) as P A P^T = L D L^T.
pub fn cholesky<T: Real>(a: &SparseMatrix<T>) -> Result<Factorization<T>, LinalgError> {
    if a.nrows() != a.ncols() {
        return Err(LinalgError::DimMismatch(format!(
            "cholesky of a {}x{} matrix",
            a.nrows(),
            a.ncols()
        )));
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(Factorization {
            permutation: Vec::new(),
            lower_factor: SparseMatrix::zeros(0, 0),
            diagonal: Vec::new(),
            inverse_permutation: Vec::new(),
        });
    }

    let perm = amd_order(n, a)?;
    let mut iperm = vec![0usize; n];
    for (k, &orig) in perm.iter().enumerate() {
        iperm[orig] = k;
    }

    // Symbolic pass: elimination tree and exact column counts of L.
    let mut parent: Vec<usize> = vec![usize::MAX; n];
    let mut flag: Vec<usize> = vec![usize::MAX; n];
    let mut counts: Vec<usize> = vec![0; n];
    for k in 0..n {
        flag[k] = k;
        let (cols, _) = a.row(perm[k]);
        for &c in cols {
            let mut i = iperm[c];
            while i < k && flag[i] != k {
                if parent[i] == usize::MAX {
                    parent[i] = k;
                }
                counts[i] += 1;
                flag[i] = k;
                i = parent[i];
            }
        }
    }

    // Column pointers of L in compressed column form.
    let mut col_ptr = vec![0usize; n + 1];
    for j in 0..n {
        col_ptr[j + 1] = col_ptr[j] + counts[j];
    }
    let nnz = col_ptr[n];
    let mut l_rows = vec![0usize; nnz];
    let mut l_vals = vec![T::zero(); nnz];
    let mut next = col_ptr.clone();

    // Numeric pass: row k of L via sparse triangular solve.
    let mut y = vec![T::zero(); n];
    let mut d = vec![T::zero(); n];
    let mut pattern: Vec<usize> = Vec::with_capacity(n);
    let mut path: Vec<usize> = Vec::with_capacity(64);
    for k in 0..n {
        flag[k] = usize::MAX - 1; // reuse flag with a fresh sentinel scheme
    }
    let mut visit = vec![usize::MAX; n];
    for k in 0..n {
        pattern.clear();
        visit[k] = k;
        let mut dk = T::zero();
        let (cols, vals) = a.row(perm[k]);
        for (&c, &v) in cols.iter().zip(vals) {
            let i = iperm[c];
            if i > k {
                continue;
            }
            if i == k {
                dk += v;
                continue;
            }
            y[i] += v;
            path.clear();
            let mut t = i;
            while visit[t] != k {
                visit[t] = k;
                path.push(t);
                t = parent[t];
            }
            // prepend the new path segment in topological order
            for &p in path.iter().rev() {
                pattern.push(p);
            }
        }
        // `pattern` holds disjoint ascending path segments pushed in reverse;
        // a full topological order needs ascending index order.
        pattern.sort_unstable();
        for &j in &pattern {
            let yj = y[j];
            y[j] = T::zero();
            let lkj = yj / d[j];
            // apply previously stored entries of column j (rows > j, < k)
            for p in col_ptr[j]..next[j] {
                y[l_rows[p]] -= l_vals[p] * yj;
            }
            dk -= lkj * yj;
            l_rows[next[j]] = k;
            l_vals[next[j]] = lkj;
            next[j] += 1;
        }
        if dk <= T::zero() || !dk.is_finite() {
            return Err(LinalgError::NotSpd { pivot: k });
        }
        d[k] = dk;
    }

    // The CSC arrays of L are exactly the CSR arrays of L^T; transposing
    // yields L stored by rows.
    let l_transpose = SparseMatrix::from_raw(n, n, col_ptr, l_rows, l_vals);
    let lower = l_transpose.transpose();

    Ok(Factorization {
        permutation: perm,
        lower_factor: lower,
        diagonal: d,
        inverse_permutation: iperm,
    })
}

fn amd_order<T: Real>(n: usize, a: &SparseMatrix<T>) -> Result<Vec<usize>, LinalgError> {
    // AMD only needs the pattern; it tolerates (and ignores) the diagonal.
    let (p, _pinv, _info) = amd::order::<usize>(
        n,
        a.row_offsets(),
        a.col_indices(),
        &amd::Control::default(),
    )
    .map_err(|s| LinalgError::OrderingFailed(format!("{s:?}")))?;
    Ok(p)
}

impl<T: Real> Factorization<T> {
    pub fn n(&self) -> usize {
        self.diagonal.len()
    }

    /// Number of stored off-diagonal entries of L.
    pub fn fill(&self) -> usize {
        self.lower_factor.nnz()
    }

    /// Solves A x = b.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n();
        debug_assert_eq!(b.len(), n);
        let mut w = vec![T::zero(); n];
        for k in 0..n {
            w[k] = b[self.permutation[k]];
        }
        self.solve_permuted(&mut w);
        let mut x = vec![T::zero(); n];
        for k in 0..n {
            x[self.permutation[k]] = w[k];
        }
        x
    }

    /// In-place solve in the permuted ordering: w <- (L D L^T)^{-1} w.
    fn solve_permuted(&self, w: &mut [T]) {
        let n = self.n();
        // forward: (I + L) z = w, row-major gather
        for k in 0..n {
            let (cols, vals) = self.lower_factor.row(k);
            let mut acc = w[k];
            for (j, l) in cols.iter().zip(vals) {
                acc -= *l * w[*j];
            }
            w[k] = acc;
        }
        for k in 0..n {
            w[k] /= self.diagonal[k];
        }
        // backward: (I + L^T) y = z, row-major scatter
        for k in (0..n).rev() {
            let wk = w[k];
            let (cols, vals) = self.lower_factor.row(k);
            for (j, l) in cols.iter().zip(vals) {
                w[*j] -= *l * wk;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn residual(a: &SparseMatrix<f64>, x: &[f64], b: &[f64]) -> f64 {
        let ax = a.matvec_alloc(x);
        let num: f64 = ax
            .iter()
            .zip(b)
            .map(|(p, q)| (p - q) * (p - q))
            .sum::<f64>()
            .sqrt();
        let den: f64 = b.iter().map(|q| q * q).sum::<f64>().sqrt();
        num / den.max(1e-300)
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let a = SparseMatrix::from_triplets(3, 3, &[(0, 0, 1.0), (1, 1, 1.0), (2, 2, 1.0)])
            .unwrap();
        let f = cholesky(&a).unwrap();
        let b = vec![1.0, -2.0, 3.0];
        assert_eq!(f.solve(&b), b);
    }

    #[test]
    fn two_by_two_hand_elimination() {
        // [[4,2],[2,3]] x = (2,3)  =>  x = (0,1)
        let a = SparseMatrix::from_triplets(
            2,
            2,
            &[(0, 0, 4.0), (0, 1, 2.0), (1, 0, 2.0), (1, 1, 3.0)],
        )
        .unwrap();
        let f = cholesky(&a).unwrap();
        let x = f.solve(&[2.0, 3.0]);
        assert!((x[0] - 0.0).abs() < 1e-14);
        assert!((x[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_pivot_reports_not_spd() {
        let a = SparseMatrix::from_triplets(2, 2, &[(0, 1, 1.0), (1, 0, 1.0), (1, 1, 1.0)])
            .unwrap();
        assert!(matches!(cholesky(&a), Err(LinalgError::NotSpd { .. })));
    }

    #[test]
    fn indefinite_matrix_reports_not_spd() {
        let a = SparseMatrix::from_triplets(2, 2, &[(0, 0, 1.0), (1, 1, -1.0)]).unwrap();
        assert!(matches!(
            cholesky(&a),
            Err(LinalgError::NotSpd { pivot: _ })
        ));
    }

    fn random_spd(n: usize, seed: u64) -> SparseMatrix<f64> {
        // A = B^T B + n*I on a banded random pattern
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut dense = vec![0.0f64; n * n];
        for i in 0..n {
            for j in i.saturating_sub(4)..(i + 5).min(n) {
                dense[i * n + j] = rng.gen_range(-1.0..1.0);
            }
        }
        let mut trip = Vec::new();
        for i in 0..n {
            for j in 0..=i {
                let mut v = 0.0;
                for k in 0..n {
                    v += dense[k * n + i] * dense[k * n + j];
                }
                if i == j {
                    v += n as f64;
                }
                if v != 0.0 {
                    trip.push((i, j, v));
                    if i != j {
                        trip.push((j, i, v));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(n, n, &trip).unwrap()
    }

    #[test]
    fn random_spd_solve_residuals_below_tolerance() {
        let a = random_spd(60, 7);
        a.symmetry_audit().unwrap();
        let f = cholesky(&a).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let b: Vec<f64> = (0..60).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let x = f.solve(&b);
            assert!(residual(&a, &x, &b) <= 1e-10);
        }
    }
}
