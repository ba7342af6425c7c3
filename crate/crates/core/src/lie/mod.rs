//! Finite-dimensional Lie algebras given by rational structure constants.
//!
//! Basis indices are 0-based in the API and 1-based in every printed
//! message. The structure constant `c[k][i][j]` is the coefficient of `e_k`
//! in `[e_i, e_j]`; the dual differential is
//! `d e^k = -sum_{i<j} c[k][i][j] e^i ^ e^j`.

pub mod complement;
pub mod flag;
pub mod series;
pub mod subspace;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{Matrix, Rational, Vector};

pub use complement::{
    nilradical_extension_candidates, verify_nilpotent_complement, ComplementClause,
};
pub use flag::{completely_solvable_flag, FlagCertificate, FlagStatus};
pub use series::{
    bracket_subspaces, derived_series, is_nilpotent, is_solvable, is_unimodular,
    lower_central_series, subspace_is_nilpotent,
};
pub use subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("antisymmetry violated: c[{k}][{i}][{j}] = {forward} but c[{k}][{j}][{i}] = {backward}", k = .k + 1, i = .i + 1, j = .j + 1)]
    AntisymmetryViolation {
        k: usize,
        i: usize,
        j: usize,
        forward: Rational,
        backward: Rational,
    },
    #[error("Jacobi identity fails on (e{i}, e{j}, e{k}): coefficient of e{l} is {residual}", i = .i + 1, j = .j + 1, k = .k + 1, l = .l + 1)]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: Rational,
    },
    #[error("Lie algebra is not solvable")]
    NotSolvable,
    #[error("invalid V + n decomposition: {0}")]
    DecompositionInvalid(ComplementClause),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `(i, j, terms)` standing for `[e_i, e_j] = sum coeff * e_k`.
pub type SparseBracket = (usize, usize, Vec<(usize, Rational)>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    /// Flattened `c[k][i][j]` at `k * n * n + i * n + j`.
    c: Vec<Rational>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Raw tensor, no antisymmetry or Jacobi check. Use [`LieAlgebra::validate`].
    pub fn from_tensor(dim: usize, c: Vec<Rational>) -> Self {
        assert_eq!(
            c.len(),
            dim * dim * dim,
            "structure tensor has the wrong size"
        );
        Self { dim, c }
    }

    /// Sets `[e_i, e_j] = value` and `[e_j, e_i] = -value`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[Rational]) {
        assert_eq!(value.len(), self.dim);
        assert_ne!(i, j, "bracket of a basis vector with itself is zero");
        for (k, v) in value.iter().enumerate() {
            let idx = self.index(k, i, j);
            self.c[idx] = v.clone();
            let idx = self.index(k, j, i);
            self.c[idx] = -v;
        }
    }

    /// Builder from sparse brackets `[e_i, e_j] = sum coeff * e_k`.
    pub fn from_brackets(dim: usize, brackets: &[SparseBracket]) -> Self {
        let mut g = Self::abelian(dim);
        for (i, j, terms) in brackets {
            let mut v = vec![Rational::zero(); dim];
            for (k, coeff) in terms {
                v[*k] += coeff;
            }
            g.set_bracket(*i, *j, &v);
        }
        g
    }

    /// Builder from structure equations: `equations[k]` lists the terms
    /// `coeff * e^i ^ e^j` (with `i < j`) of `d e^k`.
    pub fn from_differentials(dim: usize, equations: &[Vec<(Rational, usize, usize)>]) -> Self {
        assert!(equations.len() <= dim);
        let mut g = Self::abelian(dim);
        for (k, terms) in equations.iter().enumerate() {
            for (coeff, i, j) in terms {
                assert!(
                    i < j && *j < dim,
                    "differential term indices must satisfy i < j < dim"
                );
                let idx = g.index(k, *i, *j);
                g.c[idx] -= coeff;
                let idx = g.index(k, *j, *i);
                g.c[idx] += coeff;
            }
        }
        g
    }

    fn index(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim + i) * self.dim + j
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[self.index(k, i, j)]
    }

    pub fn tensor(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim)
            .map(|k| self.structure_constant(k, i, j).clone())
            .collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(k, i, j);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let n = self.dim;
        let mut m = Matrix::zero(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for k in 0..n {
                    let c = self.structure_constant(k, i, j);
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&subspace::unit(self.dim, i))
    }

    /// Terms `(coeff, i, j)`, `i < j`, of `d e^k`.
    pub fn differential(&self, k: usize) -> Vec<(Rational, usize, usize)> {
        let mut terms = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = self.structure_constant(k, i, j);
                if !c.is_zero() {
                    terms.push((-c.clone(), i, j));
                }
            }
        }
        terms
    }

    /// Antisymmetry, then the Jacobi identity; reports the first violation.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        for k in 0..n {
            for i in 0..n {
                for j in i..n {
                    let forward = self.structure_constant(k, i, j);
                    let backward = self.structure_constant(k, j, i);
                    if &-forward.clone() != backward {
                        return Err(LieError::AntisymmetryViolation {
                            k,
                            i,
                            j,
                            forward: forward.clone(),
                            backward: backward.clone(),
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut residual = Rational::zero();
                        for m in 0..n {
                            residual +=
                                self.structure_constant(m, i, j) * self.structure_constant(l, m, k);
                            residual +=
                                self.structure_constant(m, j, k) * self.structure_constant(l, m, i);
                            residual +=
                                self.structure_constant(m, k, i) * self.structure_constant(l, m, j);
                        }
                        if !residual.is_zero() {
                            return Err(LieError::JacobiViolation {
                                i,
                                j,
                                k,
                                l,
                                residual,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The same algebra in the basis `f_a = sum_i p[i][a] e_i` (columns of an
    /// invertible `p`).
    pub fn change_basis(&self, p: &Matrix) -> Option<Self> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return None;
        }
        let inv = p.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|a| p.column(a)).collect();
        let mut out = Self::abelian(n);
        for a in 0..n {
            for b in a + 1..n {
                let v = inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                out.set_bracket(a, b, &v);
            }
        }
        Some(out)
    }

    /// Restriction to a subalgebra, in the echelon basis of `sub`.
    pub fn restrict(&self, sub: &Subspace) -> Option<Self> {
        let basis = sub.basis();
        let d = basis.len();
        let mut out = Self::abelian(d);
        for a in 0..d {
            for b in a + 1..d {
                let v = sub.coordinates(&self.bracket(&basis[a], &basis[b]))?;
                out.set_bracket(a, b, &v);
            }
        }
        Some(out)
    }
}

/// Structure equations, one line per generator, 1-based.
impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.dim {
            let terms: Vec<(Rational, String)> = self
                .differential(k)
                .into_iter()
                .map(|(c, i, j)| (c, format!("e{}{}", i + 1, j + 1)))
                .collect();
            writeln!(f, "d e{} = {}", k + 1, subspace::format_terms(&terms))?;
        }
        Ok(())
    }
}
