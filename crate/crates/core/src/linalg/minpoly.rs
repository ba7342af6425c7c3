//! Minimal polynomials from Krylov sequences.

use num_traits::{One, Zero};

use super::matrix::{Matrix, Vector};
use super::poly::Polynomial;
use super::rational::Rational;

/// Monic polynomial `p` of least degree with `p(v) = 0` for the given vector,
/// i.e. the first linear dependency in `v, Mv, M^2 v, ...`.
pub fn local_minimal_polynomial(m: &Matrix, v: &[Rational]) -> Polynomial {
    let n = m.rows();
    if v.iter().all(Zero::is_zero) {
        return Polynomial::one();
    }
    let mut krylov: Vec<Vector> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().expect("nonempty"));
        krylov.push(next);
        let cols = Matrix::from_columns(n, &krylov);
        let kernel = cols.kernel();
        if let Some(dep) = kernel.into_iter().next() {
            // The first k vectors are independent, so the kernel is one dimensional
            // with a nonzero last coordinate.
            let lead = dep.last().cloned().expect("nonempty");
            debug_assert!(!lead.is_zero());
            return Polynomial::new(dep).scale(&lead.recip());
        }
    }
}

/// Minimal polynomial as the least common multiple of the Krylov
/// dependencies of each standard basis vector.
pub fn minimal_polynomial(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    let mut acc = Polynomial::one();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        if acc.eval_matrix(m).mul_vec(&e).iter().all(Zero::is_zero) {
            continue;
        }
        acc = acc.lcm(&local_minimal_polynomial(m, &e));
    }
    acc
}
