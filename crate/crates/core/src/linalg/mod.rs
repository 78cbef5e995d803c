//! Sparse and dense linear algebra kernels.
//!
//! Compressed sparse row storage carries the assembled bilinear forms, a
//! fill-reducing LDL^T factorization provides the shift-invert solves, and a
//! Lanczos iteration with full reorthogonalization computes extremal Ritz
//! pairs. A dense generalized eigensolver serves as the small-scale oracle.

mod dense;
mod lanczos;
mod ldl;
mod sparse;

pub use dense::{dense_generalized_eig, sym_tridiag_eig, DenseMatrix};
pub use lanczos::{lanczos_largest, LanczosOptions, LanczosResult, RitzPair};
pub use ldl::{cholesky, Factorization};
pub use sparse::SparseMatrix;

use thiserror::Error;

/// Errors raised by the linear algebra kernels.
#[derive(Error, Debug)]
pub enum LinalgError {
    #[error("entry ({row},{col}) out of range for a {nrows}x{ncols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        nrows: usize,
        ncols: usize,
    },
    #[error("matrix not symmetric: stored entry ({i},{j}) has no matching transpose entry")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix not SPD: nonpositive pivot at column {pivot}")]
    NotSpd { pivot: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("fill-reducing ordering failed: {0}")]
    OrderingFailed(String),
    #[error(
        "eigensolver did not converge within {max_iter} iterations; current residuals {residuals:?}"
    )]
    NoConvergence {
        max_iter: usize,
        residuals: Vec<f64>,
    },
    #[error("Lanczos breakdown persisted after {restarts} restarts")]
    Breakdown { restarts: usize },
    #[error("tridiagonal QL iteration failed to converge for eigenvalue {index}")]
    QlNoConvergence { index: usize },
}
