//! Extraction of rational linear and quadratic factors.
//!
//! Only the degree one and two parts of a factorization over the rationals
//! are found. Whatever is left is returned as a residual with no rational
//! roots and no rational quadratic factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{positive_divisors, Polynomial};
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowDegreeFactors {
    /// Distinct rational roots, ascending.
    pub roots: Vec<Rational>,
    /// Monic irreducible quadratic factors.
    pub quadratics: Vec<Polynomial>,
    /// Monic remainder; `1` when everything split into degree <= 2 pieces.
    pub residual: Polynomial,
}

impl LowDegreeFactors {
    pub fn is_complete(&self) -> bool {
        self.residual.is_constant()
    }
}

/// Discriminant of a quadratic `a x^2 + b x + c`.
pub fn discriminant(q: &Polynomial) -> Rational {
    debug_assert_eq!(q.degree(), Some(2));
    let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
    &b * &b - Rational::from_integer(4.into()) * a * c
}

/// Splits off the rational roots and rational quadratic factors of the
/// squarefree part of `p`.
pub fn low_degree_factors(p: &Polynomial) -> LowDegreeFactors {
    let sf = p.squarefree_part();
    let roots = sf.rational_roots();
    let mut rest = sf;
    for r in &roots {
        rest = rest
            .exact_div(&Polynomial::new(vec![-r.clone(), Rational::one()]))
            .expect("root divides");
    }
    let mut quadratics = Vec::new();
    loop {
        match rest.degree() {
            Some(2) => {
                quadratics.push(rest.monic());
                rest = Polynomial::one();
                break;
            }
            Some(d) if d >= 4 => match find_quadratic_factor(&rest) {
                Some(h) => {
                    rest = rest.exact_div(&h).expect("factor divides");
                    quadratics.push(h);
                }
                None => break,
            },
            // Degree 3 without rational roots is irreducible.
            _ => break,
        }
    }
    LowDegreeFactors {
        roots,
        quadratics,
        residual: rest.monic(),
    }
}

fn eval_int(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    positive_divisors(n)
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

/// Kronecker search for a quadratic factor of a polynomial without rational
/// roots: a factor `a x^2 + b x + c` of the primitive integer form must have
/// `a | lead`, `c | f(0)`, `h(1) | f(1)` and `h(-1) | f(-1)`.
fn find_quadratic_factor(f: &Polynomial) -> Option<Polynomial> {
    let ints = f.primitive_integer();
    let lead = ints.last().expect("nonconstant").clone();
    let (v0, v1, vm1) = (eval_int(&ints, 0), eval_int(&ints, 1), eval_int(&ints, -1));
    // 0 and +-1 are not roots, so the three values are nonzero.
    debug_assert!(!v0.is_zero() && !v1.is_zero() && !vm1.is_zero());
    let d0s = signed_divisors(&v0);
    let d1s = signed_divisors(&v1);
    for a in positive_divisors(&lead) {
        for c in &d0s {
            for h1 in &d1s {
                let b = h1 - &a - c;
                let hm1 = &a - &b + c;
                if hm1.is_zero() || !vm1.is_multiple_of(&hm1) {
                    continue;
                }
                let cand = Polynomial::new(vec![
                    Rational::from_integer(c.clone()),
                    Rational::from_integer(b.clone()),
                    Rational::from_integer(a.clone()),
                ]);
                if cand.divides(f) {
                    return Some(cand.monic());
                }
            }
        }
    }
    None
}

/// Real and imaginary classification of an irreducible quadratic.
pub fn has_negative_discriminant(q: &Polynomial) -> bool {
    discriminant(q).is_negative()
}
