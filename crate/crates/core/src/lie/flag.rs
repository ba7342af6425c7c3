//! Certificates for complete solvability.
//!
//! A positive answer is a full flag of ideals built one common eigenvector
//! at a time; a negative answer is a single adjoint operator with non-real
//! spectrum.

use num_traits::Zero;

use super::series::is_solvable;
use super::{LieAlgebra, LieError, Subspace};
use crate::linalg::factor::{has_negative_discriminant, low_degree_factors};
use crate::linalg::sturm::is_totally_real;
use crate::linalg::{minimal_polynomial, Matrix, Polynomial, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagStatus {
    Yes,
    No,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCertificate {
    pub status: FlagStatus,
    /// Ideals of dimension `0, 1, ..., n` for `Yes`.
    pub chain: Option<Vec<Subspace>>,
    /// Basis index whose adjoint has the returned non-real factor, for `No`.
    pub witness: Option<(usize, Polynomial)>,
}

/// Matrix of the operator induced by `ad(e_k)` on `g / ideal`, in the
/// coordinates not used as pivots by the ideal's echelon basis.
fn quotient_operator(g: &LieAlgebra, ideal: &Subspace, k: usize, free: &[usize]) -> Matrix {
    let q = free.len();
    let mut m = Matrix::zero(q, q);
    for (col, &c) in free.iter().enumerate() {
        let image = ideal.reduce(&g.bracket_basis(k, c));
        for (row, &r) in free.iter().enumerate() {
            m[(row, col)] = image[r].clone();
        }
    }
    m
}

/// Intersection of `span(basis)` with `ker(op - lambda)`.
fn restrict_to_eigenspace(basis: &[Vector], op: &Matrix, lambda: &Rational) -> Vec<Vector> {
    let dim = op.rows();
    let mut shifted = op.clone();
    shifted.add_to_diagonal(&-lambda.clone());
    let images: Vec<Vector> = basis.iter().map(|b| shifted.mul_vec(b)).collect();
    let coeffs = Matrix::from_columns(dim, &images).kernel();
    coeffs
        .iter()
        .map(|a| {
            let mut v = vec![Rational::zero(); dim];
            for (ai, b) in a.iter().zip(basis) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += ai * bi;
                }
            }
            v
        })
        .collect()
}

/// Depth-first search over rational eigenvalue choices for a common
/// eigenvector of all operators.
fn common_eigenvector(
    ops: &[Matrix],
    candidates: &[Vec<Rational>],
    basis: Vec<Vector>,
    k: usize,
) -> Option<Vector> {
    if basis.is_empty() {
        return None;
    }
    if k == ops.len() {
        return basis.into_iter().next();
    }
    for lambda in &candidates[k] {
        let sub = restrict_to_eigenspace(&basis, &ops[k], lambda);
        if let Some(v) = common_eigenvector(ops, candidates, sub, k + 1) {
            return Some(v);
        }
    }
    None
}

fn build_flag(g: &LieAlgebra) -> Option<Vec<Subspace>> {
    let n = g.dim();
    let mut chain = vec![Subspace::zero(n)];
    for _ in 0..n {
        let ideal = chain.last().expect("nonempty").clone();
        let free = ideal.free_coordinates();
        let ops: Vec<Matrix> = (0..n)
            .map(|k| quotient_operator(g, &ideal, k, &free))
            .collect();
        let candidates: Vec<Vec<Rational>> =
            ops.iter().map(|m| m.char_poly().rational_roots()).collect();
        let start: Vec<Vector> = (0..free.len())
            .map(|i| super::subspace::unit(free.len(), i))
            .collect();
        let v = common_eigenvector(&ops, &candidates, start, 0)?;
        let mut lifted = vec![Rational::zero(); n];
        for (val, &c) in v.iter().zip(&free) {
            lifted[c] = val.clone();
        }
        let next = ideal.sum(&Subspace::span(n, &[lifted]));
        debug_assert!(next.dim() == ideal.dim() + 1);
        chain.push(next);
    }
    Some(chain)
}

/// A non-real factor of the minimal polynomial of some `ad(e_i)`.
fn non_real_witness(g: &LieAlgebra) -> Option<(usize, Polynomial)> {
    for i in 0..g.dim() {
        let mp = minimal_polynomial(&g.ad_basis(i));
        if is_totally_real(&mp) {
            continue;
        }
        let parts = low_degree_factors(&mp);
        let factor = parts
            .quadratics
            .iter()
            .find(|q| has_negative_discriminant(q))
            .cloned()
            .unwrap_or_else(|| parts.residual.clone());
        return Some((i, factor));
    }
    None
}

pub fn completely_solvable_flag(g: &LieAlgebra) -> Result<FlagCertificate, LieError> {
    if !is_solvable(g) {
        return Err(LieError::NotSolvable);
    }
    if let Some(chain) = build_flag(g) {
        return Ok(FlagCertificate {
            status: FlagStatus::Yes,
            chain: Some(chain),
            witness: None,
        });
    }
    if let Some(w) = non_real_witness(g) {
        return Ok(FlagCertificate {
            status: FlagStatus::No,
            chain: None,
            witness: Some(w),
        });
    }
    Ok(FlagCertificate {
        status: FlagStatus::Undetermined,
        chain: None,
        witness: None,
    })
}

/// Every subspace in the chain is an ideal.
pub fn chain_is_flag_of_ideals(g: &LieAlgebra, chain: &[Subspace]) -> bool {
    let n = g.dim();
    chain.len() == n + 1
        && chain.iter().enumerate().all(|(d, s)| s.dim() == d)
        && chain.windows(2).all(|w| w[1].contains_subspace(&w[0]))
        && chain.iter().all(|s| {
            s.basis()
                .iter()
                .all(|v| (0..n).all(|i| s.contains(&g.bracket(&super::subspace::unit(n, i), v))))
        })
}
