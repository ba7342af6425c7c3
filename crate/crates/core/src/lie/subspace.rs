//! Subspaces of `Q^n` kept in reduced row echelon form.

use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{Matrix, Rational, Vector};

/// A subspace of `Q^ambient_dim`. The basis is the nonzero rows of the
/// reduced echelon form of any spanning set, so two subspaces are equal iff
/// their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let rows: Vec<Vector> = vectors.to_vec();
        assert!(
            rows.iter().all(|v| v.len() == ambient_dim),
            "vector length mismatch"
        );
        let (r, pivots) = Matrix::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, &(0..ambient_dim).collect::<Vec<_>>())
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vector> = indices.iter().map(|&i| unit(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in
    /// the subspace. The result vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, bi) in out.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *o -= &f * bi;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &all)
    }

    /// Coordinates of a member with respect to the echelon basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Indices not used as pivots; the corresponding unit vectors span a
    /// complement.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Formats a vector as `a*e1 + b*e3`, 1-based.
pub fn format_vector(v: &[Rational]) -> String {
    let terms: Vec<(Rational, String)> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), format!("e{}", i + 1)))
        .collect();
    format_terms(&terms)
}

pub(crate) fn format_terms(terms: &[(Rational, String)]) -> String {
    use num_traits::Signed;
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, name)) in terms.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    out
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}
