//! Lights Out on an m×n grid: the game matrix A(m,n), solving over GF(2), minimal
//! solutions, and exact checks of the determinant and singularity formulas.
//!
//! Matrix and spectral routines are generic over their scalar type (any `num-traits`
//! integer or float); the aliases below fix the types the rest of the crate uses.

pub mod board;
pub mod criterion;
pub mod error;
pub mod gf2;
pub mod matrices;
pub mod solver;
pub mod spectral;

pub use board::{apply_presses, linear_index, press, toggled_set, Config, GridDims, PressVector};
pub use criterion::{classify, Condition, SingularityVerdict};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use matrices::{build_a, build_a_gf2, build_a_int, kronecker_product, kronecker_sum, tridiagonal_ones, DenseMatrix};
pub use solver::{LightsOut, SolveReport, SweepReport, SweepRow};

pub use num_bigint::{BigInt, BigUint};

/// Exact integer matrix.
pub type IntMatrix = DenseMatrix<BigInt>;

/// Double-precision matrix.
pub type RealMatrix = DenseMatrix<f64>;

/// Eigenvalue-product determinant in double precision.
pub type DetResult = spectral::DetResult<f64>;
