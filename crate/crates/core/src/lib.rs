//! Adaptive edge-element eigensolver for the three-dimensional Maxwell
//! cavity problem.
//!
//! The crate discretizes the curl-curl eigenvalue problem
//! `curl curl u = lambda u`, `div u = 0`, `u x n = 0` with lowest-order
//! Nedelec (Whitney edge) elements on tetrahedral meshes, solves for the
//! smallest positive eigenvalues with a gradient-deflated Lanczos iteration,
//! computes residual face-jump error indicators, and drives the adaptive
//! solve -> estimate -> mark -> refine loop used by the convergence studies
//! on the unit cube and the Fichera domain.
//!
//! All numerical kernels are generic over the scalar type through
//! [`num::Real`]; the aliases below fix the default double-precision build.

pub mod eigensolver;
pub mod estimator;
pub mod fem;
pub mod geometry;
pub mod linalg;
pub mod mesh;
pub mod num;
pub mod reference;
pub mod refine;
pub mod study;

pub use num::{real, Real};

/// Double-precision mesh.
pub type Mesh64 = mesh::Mesh<f64>;
/// Double-precision sparse matrix.
pub type SparseMatrix64 = linalg::SparseMatrix<f64>;
/// Double-precision sparse factorization.
pub type Factorization64 = linalg::Factorization<f64>;
/// Double-precision assembled curl-curl system.
pub type AssembledSystem64 = fem::AssembledSystem<f64>;
/// Double-precision eigenpair.
pub type EigenPair64 = eigensolver::EigenPair<f64>;
/// Double-precision indicator field.
pub type IndicatorField64 = estimator::IndicatorField<f64>;
/// Double-precision study configuration.
pub type StudyConfig64 = study::StudyConfig<f64>;
/// Double-precision study record.
pub type RunRecord64 = study::RunRecord<f64>;
