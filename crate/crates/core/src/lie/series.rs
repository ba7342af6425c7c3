//! Derived and lower central series.

use super::{LieAlgebra, Subspace};

/// `[a, b]`, spanned by the brackets of basis pairs.
pub fn bracket_subspaces(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vectors = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            let v = g.bracket(x, y);
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                vectors.push(v);
            }
        }
    }
    Subspace::span(g.dim(), &vectors)
}

/// `g, [g,g], [[g,g],[g,g]], ...` until the terms stop shrinking; the last
/// entry is the stable term.
pub fn derived_series(g: &LieAlgebra) -> Vec<Subspace> {
    let mut series = vec![Subspace::whole(g.dim())];
    loop {
        let last = series.last().expect("nonempty");
        let next = bracket_subspaces(g, last, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

/// `g, [g,g], [g,[g,g]], ...` until stabilization.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let whole = Subspace::whole(g.dim());
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = bracket_subspaces(g, &whole, last);
        if next.dim() == last.dim() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &LieAlgebra) -> bool {
    derived_series(g).last().is_some_and(Subspace::is_zero)
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    lower_central_series(g)
        .last()
        .is_some_and(Subspace::is_zero)
}

/// Lower central series of the subalgebra `n` (`n, [n,n], [n,[n,n]], ...`)
/// reaches zero.
pub fn subspace_is_nilpotent(g: &LieAlgebra, n: &Subspace) -> bool {
    let mut term = n.clone();
    loop {
        if term.is_zero() {
            return true;
        }
        let next = bracket_subspaces(g, n, &term);
        if next.dim() == term.dim() {
            return false;
        }
        term = next;
    }
}

pub fn is_unimodular(g: &LieAlgebra) -> bool {
    (0..g.dim()).all(|i| num_traits::Zero::is_zero(&g.ad_basis(i).trace()))
}
