//! Verification of a decomposition `g = V + n` with `n` a nilpotent ideal and
//! `V` acting through commuting semisimple parts that kill `V`.

use std::fmt;

use num_traits::Zero;

use super::series::{bracket_subspaces, subspace_is_nilpotent};
use super::{LieAlgebra, LieError, Subspace};
use crate::linalg::jordan_chevalley;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplementClause {
    /// `V + n` is not a direct sum equal to `g`.
    NotDirectSum,
    /// `[g, n]` is not contained in `n`.
    NotIdeal,
    NotNilpotent,
    /// `[g, g]` is not contained in `n`.
    DerivedNotContained,
    /// The semisimple part of `ad(A_a)` does not kill `A_b` (0-based indices
    /// into the V basis).
    SemisimplePartActs {
        a: usize,
        b: usize,
    },
}

impl fmt::Display for ComplementClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotDirectSum => write!(f, "g is not the direct sum V + n"),
            Self::NotIdeal => write!(f, "n is not an ideal"),
            Self::NotNilpotent => write!(f, "n is not nilpotent"),
            Self::DerivedNotContained => write!(f, "n does not contain [g,g]"),
            Self::SemisimplePartActs { a, b } => {
                write!(
                    f,
                    "semisimple part of ad(A{}) does not annihilate A{}",
                    a + 1,
                    b + 1
                )
            }
        }
    }
}

/// Checks the clauses in order and reports the first failure: direct sum,
/// ideal, nilpotent, contains `[g,g]`, and `ad(A)_s(B) = 0` for all basis
/// vectors `A, B` of `V`.
pub fn verify_nilpotent_complement(
    g: &LieAlgebra,
    v: &Subspace,
    n: &Subspace,
) -> Result<(), LieError> {
    let dim = g.dim();
    for s in [v, n] {
        if s.ambient_dim() != dim {
            return Err(LieError::DimensionMismatch {
                expected: dim,
                found: s.ambient_dim(),
            });
        }
    }
    let fail = |c| Err(LieError::DecompositionInvalid(c));
    if v.dim() + n.dim() != dim || v.sum(n).dim() != dim {
        return fail(ComplementClause::NotDirectSum);
    }
    let whole = Subspace::whole(dim);
    if !n.contains_subspace(&bracket_subspaces(g, &whole, n)) {
        return fail(ComplementClause::NotIdeal);
    }
    if !subspace_is_nilpotent(g, n) {
        return fail(ComplementClause::NotNilpotent);
    }
    if !n.contains_subspace(&bracket_subspaces(g, &whole, &whole)) {
        return fail(ComplementClause::DerivedNotContained);
    }
    for (a, va) in v.basis().iter().enumerate() {
        let s = jordan_chevalley(&g.ad_matrix(va)).semisimple;
        for (b, vb) in v.basis().iter().enumerate() {
            if !s.mul_vec(vb).iter().all(Zero::is_zero) {
                return fail(ComplementClause::SemisimplePartActs { a, b });
            }
        }
    }
    Ok(())
}

/// Basis indices `i` with `e_i` outside `n` such that `n + span{e_i}` is
/// still a nilpotent ideal. An empty answer is evidence, not proof, that `n`
/// is the nilradical: only single basis directions are tried.
pub fn nilradical_extension_candidates(g: &LieAlgebra, n: &Subspace) -> Vec<usize> {
    let dim = g.dim();
    let whole = Subspace::whole(dim);
    (0..dim)
        .filter(|&i| {
            let e = super::subspace::unit(dim, i);
            if n.contains(&e) {
                return false;
            }
            let ext = n.sum(&Subspace::span(dim, &[e]));
            ext.contains_subspace(&bracket_subspaces(g, &whole, &ext))
                && subspace_is_nilpotent(g, &ext)
        })
        .collect()
}
