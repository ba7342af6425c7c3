//! Additive Jordan-Chevalley decomposition over the rationals.

use super::matrix::Matrix;
use super::minpoly::minimal_polynomial;
use super::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// `outer(inner(x)) mod modulus` with reduction at every Horner step.
fn compose_mod(outer: &Polynomial, inner: &Polynomial, modulus: &Polynomial) -> Polynomial {
    outer
        .coeffs()
        .iter()
        .rev()
        .fold(Polynomial::zero(), |acc, c| {
            (&(&acc * inner) + &Polynomial::constant(c.clone())).rem(modulus)
        })
}

/// Semisimple part of `m` as a polynomial in `m`, reduced modulo the minimal
/// polynomial.
///
/// With `f` the squarefree part of the minimal polynomial `mu`, Newton's
/// iteration `s <- s - f(s) / f'(s)` is run in `Q[x]/(mu)` starting from
/// `s = x`; it stops as soon as `f(s) = 0` there.
pub fn semisimple_polynomial(m: &Matrix) -> Polynomial {
    let mu = minimal_polynomial(m);
    let f = mu.squarefree_part();
    let df = f.derivative();
    let mut s = Polynomial::x().rem(&mu);
    // mu divides f^r, r the largest multiplicity; convergence is quadratic.
    let multiplicity = mu.degree().unwrap_or(0).max(1);
    let bound = usize::BITS - (multiplicity - 1).leading_zeros() + 1;
    for _ in 0..=bound {
        let fs = compose_mod(&f, &s, &mu);
        if fs.is_zero() {
            return s;
        }
        let dfs = compose_mod(&df, &s, &mu);
        let inv = dfs
            .inverse_mod(&mu)
            .expect("f' is invertible modulo the minimal polynomial");
        s = (&s - &(&fs * &inv)).rem(&mu);
    }
    unreachable!("Newton iteration for the semisimple part failed to converge")
}

pub fn jordan_chevalley(m: &Matrix) -> JordanDecomposition {
    assert!(
        m.is_square(),
        "Jordan-Chevalley decomposition of a non-square matrix"
    );
    let semisimple = semisimple_polynomial(m).eval_matrix(m);
    let nilpotent = m - &semisimple;
    JordanDecomposition {
        semisimple,
        nilpotent,
    }
}
