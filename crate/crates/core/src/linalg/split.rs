//! Split (real spectrum) and compact (imaginary spectrum) parts of a
//! semisimple rational matrix.

use num_traits::One;

use super::factor::{has_negative_discriminant, low_degree_factors};
use super::matrix::Matrix;
use super::minpoly::minimal_polynomial;
use super::poly::Polynomial;
use super::rational::Rational;
use super::sturm::is_totally_real;
use super::LinalgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCompactParts {
    pub split: Matrix,
    pub compact: Matrix,
}

/// The compact part restricted to one primary component `x^2 - 2a x + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactComponent {
    pub factor: Polynomial,
    /// Real part `a` of the conjugate eigenvalue pair.
    pub center: Rational,
    /// `(s - a) E(s)` where `E` is the primary projector of the component.
    pub compact: Matrix,
}

/// Primary decomposition of a squarefree minimal polynomial into the
/// totally real part and the negative-discriminant quadratics.
struct Primary {
    real: Polynomial,
    complex: Vec<(Polynomial, Rational)>,
}

fn primary_decomposition(s: &Matrix) -> Result<(Polynomial, Primary), LinalgError> {
    if !s.is_square() {
        return Err(LinalgError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let mu = minimal_polynomial(s);
    if !mu.is_squarefree() {
        return Err(LinalgError::NotSemisimple { minpoly: mu });
    }
    let parts = low_degree_factors(&mu);
    if !parts.residual.is_constant() && !is_totally_real(&parts.residual) {
        return Err(LinalgError::NotRationallySplittable {
            factor: parts.residual,
        });
    }
    let mut real = parts.residual.clone();
    for r in &parts.roots {
        real = &real * &Polynomial::new(vec![-r.clone(), Rational::one()]);
    }
    let mut complex = Vec::new();
    for q in parts.quadratics {
        if has_negative_discriminant(&q) {
            let center = -q.coeff(1) / Rational::from_integer(2.into());
            complex.push((q, center));
        } else {
            real = &real * &q;
        }
    }
    Ok((mu, Primary { real, complex }))
}

/// Solves `p = r_i mod m_i` for pairwise coprime moduli.
fn crt(residues: &[(Polynomial, Polynomial)]) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut modulus = Polynomial::one();
    for (r, m) in residues {
        let inv = modulus.rem(m).inverse_mod(m).expect("coprime moduli");
        let t = (&(r - &acc) * &inv).rem(m);
        acc = &acc + &(&modulus * &t);
        modulus = &modulus * m;
    }
    acc.rem(&modulus)
}

/// Splits a semisimple `s` as `split + compact`: on the totally real primary
/// component the compact part vanishes, on a component `x^2 - 2a x + c` with
/// `a^2 < c` the split part acts as `a`.
pub fn split_compact_parts(s: &Matrix) -> Result<SplitCompactParts, LinalgError> {
    let (_, primary) = primary_decomposition(s)?;
    let mut residues = vec![(Polynomial::x(), primary.real.clone())];
    for (q, a) in &primary.complex {
        residues.push((Polynomial::constant(a.clone()), q.clone()));
    }
    let split = crt(&residues).eval_matrix(s);
    let compact = s - &split;
    Ok(SplitCompactParts { split, compact })
}

/// The compact part broken up by primary component; the matrices sum to
/// `split_compact_parts(s).compact`.
pub fn compact_components(s: &Matrix) -> Result<Vec<CompactComponent>, LinalgError> {
    let (_, primary) = primary_decomposition(s)?;
    let mut out = Vec::new();
    for (j, (q, a)) in primary.complex.iter().enumerate() {
        let mut residues = vec![(Polynomial::zero(), primary.real.clone())];
        for (k, (other, _)) in primary.complex.iter().enumerate() {
            let value = if k == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            };
            residues.push((value, other.clone()));
        }
        let projector = crt(&residues);
        let shifted = &Polynomial::x() - &Polynomial::constant(a.clone());
        let compact = (&shifted * &projector).eval_matrix(s);
        out.push(CompactComponent {
            factor: q.clone(),
            center: a.clone(),
            compact,
        });
    }
    Ok(out)
}
