//! Real root counting with Sturm chains.

use std::cmp::Ordering;

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::Rational;

/// Endpoint of an open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

/// The canonical Sturm chain `p, p', -rem(p_{i-1}, p_i), ...`.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone()];
    if p.is_constant() {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let k = chain.len();
        let r = chain[k - 2].rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_at(p: &Polynomial, at: &Bound) -> Ordering {
    match at {
        Bound::Finite(x) => p.eval(x).cmp(&Rational::zero()),
        Bound::PosInfinity => p.leading().cmp(&Rational::zero()),
        Bound::NegInfinity => {
            let s = p.leading().cmp(&Rational::zero());
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }
    }
}

fn variations(chain: &[Polynomial], at: &Bound) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|p| sign_at(p, at))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lower, upper)`.
/// The polynomial is reduced to its squarefree part first.
pub fn sturm_real_root_count(p: &Polynomial, lower: &Bound, upper: &Bound) -> usize {
    if p.is_constant() {
        return 0;
    }
    let sf = p.squarefree_part();
    let chain = sturm_chain(&sf);
    let (va, vb) = (variations(&chain, lower), variations(&chain, upper));
    // V(a) - V(b) counts the roots in (a, b].
    let half_open = va.saturating_sub(vb);
    match upper {
        Bound::Finite(b) if sf.eval(b).is_zero() => half_open - 1,
        _ => half_open,
    }
}

pub fn real_root_count(p: &Polynomial) -> usize {
    sturm_real_root_count(p, &Bound::NegInfinity, &Bound::PosInfinity)
}

/// Every root of `p` is real.
pub fn is_totally_real(p: &Polynomial) -> bool {
    let sf = p.squarefree_part();
    sf.degree().is_none_or(|d| real_root_count(&sf) == d)
}

/// Count of negative real roots.
pub fn negative_root_count(p: &Polynomial) -> usize {
    sturm_real_root_count(p, &Bound::NegInfinity, &Bound::Finite(Rational::zero()))
}

/// Every root of `p` is real and strictly positive.
pub fn is_totally_positive(p: &Polynomial) -> bool {
    let sf = p.squarefree_part();
    sf.degree().is_none_or(|d| {
        sturm_real_root_count(&sf, &Bound::Finite(Rational::zero()), &Bound::PosInfinity) == d
    })
}
