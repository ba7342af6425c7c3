//! Detection of cyclotomic factors by trial division.

use num_integer::Integer;
use num_traits::One;

use super::poly::Polynomial;
use super::rational::Rational;

pub fn euler_totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `Phi_d` from `x^d - 1 = prod_{e | d} Phi_e`.
pub fn cyclotomic_polynomial(d: usize) -> Polynomial {
    assert!(d >= 1);
    let mut num = Polynomial::monomial(Rational::one(), d);
    num = &num - &Polynomial::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = num
            .exact_div(&cyclotomic_polynomial(e))
            .expect("Phi_e divides x^d - 1");
    }
    num
}

/// Every `d` with `Phi_d | p`, with its multiplicity, ascending in `d`.
pub fn cyclotomic_factors(p: &Polynomial) -> Vec<(usize, usize)> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    // totient(d) >= sqrt(d / 2), so only d <= 2 deg^2 can qualify.
    let limit = 2 * deg * deg + 2;
    let mut rest = p.clone();
    let mut out = Vec::new();
    for d in 1..=limit {
        if euler_totient(d) > rest.degree().unwrap_or(0) {
            continue;
        }
        let phi = cyclotomic_polynomial(d);
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&phi) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((d, mult));
        }
    }
    out
}

/// Sum of `multiplicity * totient(d)`: the number of eigenvalues accounted
/// for by roots of unity.
pub fn cyclotomic_degree(factors: &[(usize, usize)]) -> usize {
    factors.iter().map(|&(d, m)| m * euler_totient(d)).sum()
}

pub fn lcm_of_orders(factors: &[(usize, usize)]) -> usize {
    factors.iter().fold(1, |acc, &(d, _)| acc.lcm(&d))
}
