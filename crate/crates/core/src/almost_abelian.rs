//! Almost abelian groups `R x_phi R^n` with lattices `Z x Z^n`.
//!
//! The lattice is described by its holonomy `B = phi(1)` (an integer matrix
//! of determinant +-1) and optionally by a rational derivation `Z` generating
//! the one-parameter group, taken literally or multiplied by pi.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cohomology::{cohomology, wedge_basis, CohomologyError};
use crate::lie::LieAlgebra;
use crate::linalg::cyclotomic::{cyclotomic_degree, lcm_of_orders};
use crate::linalg::factor::{has_negative_discriminant, low_degree_factors};
use crate::linalg::rational::rational_sqrt;
use crate::linalg::sturm::{is_totally_positive, is_totally_real, negative_root_count};
use crate::linalg::{cyclotomic_factors, log_unipotent, minimal_polynomial, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlmostAbelianError {
    #[error("invalid holonomy: {0}")]
    InvalidHolonomy(String),
    #[error("holonomy matrix required")]
    MissingHolonomy,
    #[error("holonomy has an eigenvalue that is not a root of unity")]
    NotQuasiUnipotent,
    #[error("holonomy to the power {m} is not the identity")]
    NotFiniteOrder { m: usize },
    #[error("derivation is {found}x{found}, holonomy acts on R^{expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    One,
    Pi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyInput {
    n: usize,
    holonomy: Option<Matrix>,
    derivation: Option<(Matrix, Scale)>,
}

impl HolonomyInput {
    /// `B` must be square with integer entries and determinant +-1.
    pub fn new(
        holonomy: Option<Matrix>,
        derivation: Option<(Matrix, Scale)>,
    ) -> Result<Self, AlmostAbelianError> {
        let n = match (&holonomy, &derivation) {
            (Some(b), _) => b.rows(),
            (None, Some((z, _))) => z.rows(),
            (None, None) => return Err(AlmostAbelianError::MissingHolonomy),
        };
        if let Some(b) = &holonomy {
            if !b.is_square() {
                return Err(AlmostAbelianError::InvalidHolonomy(format!(
                    "{}x{} is not square",
                    b.rows(),
                    b.cols()
                )));
            }
            if b.entries().iter().any(|v| !v.is_integer()) {
                return Err(AlmostAbelianError::InvalidHolonomy(
                    "entries must be integers".into(),
                ));
            }
            if !b.determinant().abs().is_one() {
                return Err(AlmostAbelianError::InvalidHolonomy(format!(
                    "determinant {} is not +-1",
                    b.determinant()
                )));
            }
        }
        if let Some((z, _)) = &derivation {
            if !z.is_square() || z.rows() != n {
                return Err(AlmostAbelianError::DimensionMismatch {
                    expected: n,
                    found: z.rows(),
                });
            }
        }
        Ok(Self {
            n,
            holonomy,
            derivation,
        })
    }

    pub fn from_holonomy(b: Matrix) -> Result<Self, AlmostAbelianError> {
        Self::new(Some(b), None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn holonomy(&self) -> Option<&Matrix> {
        self.holonomy.as_ref()
    }

    pub fn derivation(&self) -> Option<&(Matrix, Scale)> {
        self.derivation.as_ref()
    }

    fn require_holonomy(&self) -> Result<&Matrix, AlmostAbelianError> {
        self.holonomy
            .as_ref()
            .ok_or(AlmostAbelianError::MissingHolonomy)
    }
}

/// `e_1` acts on `span{e_2, ..., e_{n+1}}` by `d`.
pub fn almost_abelian_algebra(d: &Matrix) -> LieAlgebra {
    let n = d.rows();
    let mut g = LieAlgebra::abelian(n + 1);
    for j in 0..n {
        let mut v = vec![Rational::zero(); n + 1];
        for i in 0..n {
            v[i + 1] = d[(i, j)].clone();
        }
        g.set_bracket(0, j + 1, &v);
    }
    g
}

/// `n + 1 - rank(B - I)`.
pub fn b1_lattice(inp: &HolonomyInput) -> Result<usize, AlmostAbelianError> {
    let b = inp.require_holonomy()?;
    Ok(inp.n + 1 - (b - &Matrix::identity(inp.n)).rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MostowStatus {
    Holds,
    Fails,
    Undetermined,
}

impl fmt::Display for MostowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Holds => "holds",
            Self::Fails => "fails",
            Self::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MostowVerdict {
    pub status: MostowStatus,
    pub reason: String,
}

impl MostowVerdict {
    fn new(status: MostowStatus, reason: impl Into<String>) -> Self {
        Self {
            status,
            reason: reason.into(),
        }
    }
}

/// Decides whether `i*pi` is a rational combination of the eigenvalues of
/// the generating derivation. The first applicable layer wins:
///
/// 1. a rational `Z`: its eigenvalues are algebraic, so never;
/// 2. `pi * Z`: decided when the spectrum of `Z` lies in quadratic fields;
///    `i` is a combination exactly when some conjugate pair `a +- q i` has
///    rational `q`;
/// 3. only `B`: roots of unity other than 1 and negative eigenvalues pair up
///    as `(lambda - conj lambda) / 2 = i pi`; an all-positive real spectrum
///    never produces an imaginary combination.
pub fn mostow_status(inp: &HolonomyInput) -> MostowVerdict {
    match (&inp.derivation, &inp.holonomy) {
        (Some((_, Scale::One)), _) => MostowVerdict::new(
            MostowStatus::Holds,
            "rational derivation: eigenvalues are algebraic and cannot combine to i*pi",
        ),
        (Some((z, Scale::Pi)), _) => mostow_from_pi_derivation(z),
        (None, Some(b)) => mostow_from_holonomy(b),
        (None, None) => MostowVerdict::new(
            MostowStatus::Undetermined,
            "no holonomy or derivation given",
        ),
    }
}

fn mostow_from_pi_derivation(z: &Matrix) -> MostowVerdict {
    let cp = z.char_poly();
    let parts = low_degree_factors(&cp);
    if !parts.residual.is_constant() {
        return MostowVerdict::new(
            MostowStatus::Undetermined,
            format!(
                "spectrum of Z has an irreducible factor {} of degree >= 3",
                parts.residual
            ),
        );
    }
    for q in parts
        .quadratics
        .iter()
        .filter(|q| has_negative_discriminant(q))
    {
        let center = -q.coeff(1) / Rational::from_integer(2.into());
        let imag_sq = q.coeff(0) - &center * &center;
        if let Some(imag) = rational_sqrt(&imag_sq) {
            let witness = if center.is_zero() {
                format!("i = nu/{imag} with nu = {imag}i")
            } else {
                format!(
                    "i = (nu - conj(nu))/{} with nu = {center} + {imag}i",
                    Rational::from_integer(2.into()) * &imag
                )
            };
            let reason = format!("{witness}, eigenvalue of Z from factor {q}; i*pi is a rational combination of the spectrum");
            return MostowVerdict::new(MostowStatus::Fails, reason);
        }
    }
    let reason = "imaginary parts of the spectrum of Z are irrational multiples of i; \
                  i*pi is not a rational combination";
    MostowVerdict::new(MostowStatus::Holds, reason)
}

fn mostow_from_holonomy(b: &Matrix) -> MostowVerdict {
    let cp = b.char_poly();
    if let Some(&(d, _)) = cyclotomic_factors(&cp).iter().find(|(d, _)| *d >= 2) {
        let reason = format!("holonomy has a primitive root of unity of order {d} as eigenvalue (cyclotomic factor Phi_{d})");
        return MostowVerdict::new(MostowStatus::Fails, reason);
    }
    let negatives = negative_root_count(&cp);
    if negatives > 0 {
        let reason = format!(
            "holonomy has {negatives} negative real eigenvalue(s); log|r| + i*pi pairs give i*pi"
        );
        return MostowVerdict::new(MostowStatus::Fails, reason);
    }
    if is_totally_positive(&cp) {
        let reason = format!(
            "holonomy spectrum ({cp}) is real and positive; no rational combination is imaginary"
        );
        return MostowVerdict::new(MostowStatus::Holds, reason);
    }
    let reason = "complex holonomy eigenvalues off the unit circle; \
                  general multiplicative relations among algebraic numbers are not decided";
    MostowVerdict::new(MostowStatus::Undetermined, reason)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverType {
    Torus,
    Nilmanifold,
    CompletelySolvable,
    Other,
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Torus => "torus",
            Self::Nilmanifold => "nilmanifold",
            Self::CompletelySolvable => "completely-solvable",
            Self::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCover {
    /// Index of the sublattice `mZ x Z^n`.
    pub m: usize,
    pub cover_type: CoverType,
    pub algebra: LieAlgebra,
}

/// The finite cover with holonomy `B^m` unipotent, `m` the least common
/// multiple of the cyclotomic orders of `B`.
pub fn torus_cover(inp: &HolonomyInput) -> Result<TorusCover, AlmostAbelianError> {
    let b = inp.require_holonomy()?;
    let factors = cyclotomic_factors(&b.char_poly());
    if cyclotomic_degree(&factors) != inp.n {
        return Err(AlmostAbelianError::NotQuasiUnipotent);
    }
    let m = lcm_of_orders(&factors);
    let power = b.pow(m as u64);
    let identity = Matrix::identity(inp.n);
    if power == identity {
        return Ok(TorusCover {
            m,
            cover_type: CoverType::Torus,
            algebra: LieAlgebra::abelian(inp.n + 1),
        });
    }
    let log = log_unipotent(&power).map_err(|_| AlmostAbelianError::NotQuasiUnipotent)?;
    Ok(TorusCover {
        m,
        cover_type: CoverType::Nilmanifold,
        algebra: almost_abelian_algebra(&log),
    })
}

/// Matrix of `Lambda^k(M)` on the lexicographic wedge basis: the entry at
/// `(I, J)` is the minor of `M` on rows `I` and columns `J`.
pub fn exterior_power(m: &Matrix, k: usize) -> Matrix {
    let basis = wedge_basis(m.rows(), k);
    let mut out = Matrix::zero(basis.len(), basis.len());
    for (r, rows) in basis.iter().enumerate() {
        for (c, cols) in basis.iter().enumerate() {
            let minor = Matrix::from_rows(
                rows.indices()
                    .iter()
                    .map(|&i| cols.indices().iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect(),
            );
            out[(r, c)] = if k == 0 {
                Rational::one()
            } else {
                minor.determinant()
            };
        }
    }
    out
}

/// Dimensions of the forms on the torus cover fixed by the deck generator
/// `1 + B^T`, degree by degree.
pub fn invariant_betti(inp: &HolonomyInput, m: usize) -> Result<Vec<usize>, AlmostAbelianError> {
    let b = inp.require_holonomy()?;
    if b.pow(m as u64) != Matrix::identity(inp.n) {
        return Err(AlmostAbelianError::NotFiniteOrder { m });
    }
    let action = Matrix::identity(1).direct_sum(&b.transpose());
    Ok((0..=inp.n + 1)
        .map(|k| {
            let mut shifted = exterior_power(&action, k);
            shifted.add_to_diagonal(&-Rational::one());
            shifted.kernel().len()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostAbelianReport {
    pub b1: Option<usize>,
    pub mostow: MostowVerdict,
    pub cyclotomic: Vec<(usize, usize)>,
    pub order_m: Option<usize>,
    pub cover_type: CoverType,
    /// Betti numbers of the finite cover's Lie algebra (torus or nilmanifold).
    pub cover_betti: Option<Vec<usize>>,
    /// Betti numbers of the quotient when `B` has finite order.
    pub invariant_betti: Option<Vec<usize>>,
    /// Betti numbers of the Lie algebra built from the derivation.
    pub algebra_betti: Option<Vec<usize>>,
    /// The algebra's cohomology is the de Rham cohomology of the quotient.
    pub derham_valid: bool,
}

impl AlmostAbelianReport {
    /// Betti numbers of `G / Gamma` when one of the computations applies:
    /// invariants on the torus cover, the nilmanifold itself when `m = 1`, or
    /// the Lie algebra when the Mostow condition holds.
    pub fn quotient_betti(&self) -> Option<&[usize]> {
        if let Some(b) = &self.invariant_betti {
            return Some(b);
        }
        if self.order_m == Some(1) {
            if let Some(b) = &self.cover_betti {
                return Some(b);
            }
        }
        if self.derham_valid {
            return self.algebra_betti.as_deref();
        }
        None
    }
}

pub fn analyze(inp: &HolonomyInput) -> Result<AlmostAbelianReport, AlmostAbelianError> {
    let mostow = mostow_status(inp);
    let b1 = inp.holonomy.as_ref().map(|_| b1_lattice(inp)).transpose()?;
    let cyclotomic = inp
        .holonomy
        .as_ref()
        .map(|b| cyclotomic_factors(&b.char_poly()))
        .unwrap_or_default();
    let (mut order_m, mut cover_type, mut cover_betti, mut inv) =
        (None, CoverType::Other, None, None);
    match inp.holonomy.as_ref().map(|_| torus_cover(inp)) {
        Some(Ok(cover)) => {
            order_m = Some(cover.m);
            cover_type = cover.cover_type;
            cover_betti = Some(cohomology(&cover.algebra)?.betti);
            if cover.cover_type == CoverType::Torus {
                inv = Some(invariant_betti(inp, cover.m)?);
            }
        }
        Some(Err(AlmostAbelianError::NotQuasiUnipotent)) => {
            let b = inp.holonomy.as_ref().expect("holonomy present");
            if is_totally_positive(&b.char_poly()) {
                cover_type = CoverType::CompletelySolvable;
            }
        }
        Some(Err(e)) => return Err(e),
        None => {
            let (z, _) = inp
                .derivation
                .as_ref()
                .expect("input has a holonomy or a derivation");
            if is_totally_real(&minimal_polynomial(z)) {
                cover_type = CoverType::CompletelySolvable;
            }
        }
    }
    let algebra_betti = inp
        .derivation
        .as_ref()
        .map(|(z, _)| cohomology(&almost_abelian_algebra(z)))
        .transpose()?;
    let derham_valid = mostow.status == MostowStatus::Holds && algebra_betti.is_some();
    Ok(AlmostAbelianReport {
        b1,
        mostow,
        cyclotomic,
        order_m,
        cover_type,
        cover_betti,
        invariant_betti: inv,
        algebra_betti: algebra_betti.map(|r| r.betti),
        derham_valid,
    })
}
