//! Exact arithmetic substrate: rationals, polynomials, matrices and the
//! spectral tools built on them.

pub mod cyclotomic;
pub mod factor;
pub mod jordan;
pub mod log;
pub mod matrix;
pub mod minpoly;
pub mod poly;
pub mod rational;
pub mod split;
pub mod sturm;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_factors, cyclotomic_polynomial, euler_totient};
pub use jordan::{jordan_chevalley, JordanDecomposition};
pub use log::log_unipotent;
pub use matrix::{Matrix, Vector};
pub use minpoly::minimal_polynomial;
pub use poly::Polynomial;
pub use rational::Rational;
pub use split::{compact_components, split_compact_parts, CompactComponent, SplitCompactParts};
pub use sturm::{sturm_real_root_count, Bound};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not semisimple: minimal polynomial {minpoly} is not squarefree")]
    NotSemisimple { minpoly: Polynomial },
    #[error("factor {factor} has non-real roots and degree at least 3; not rationally splittable")]
    NotRationallySplittable { factor: Polynomial },
    #[error("matrix is not unipotent")]
    NotUnipotent,
}

/// `rank` and a kernel basis, see [`Matrix::rank_and_kernel`].
pub fn rank_and_kernel(m: &Matrix) -> (usize, Vec<Vector>) {
    m.rank_and_kernel()
}
