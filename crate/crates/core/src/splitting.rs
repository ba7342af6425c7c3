//! Semisimple splittings, nilshadows and partially killed torus actions.
//!
//! Given `g = V + n` with `n` a nilpotent ideal and an abelian complement
//! `V = span{A_1, ..., A_k}`, a kill map assigns to each `A_i` an operator
//! `K_i` built from the semisimple part of `ad(A_i)`. Extending `K` linearly
//! (vanishing on `n`), the modified bracket on the vector space of `g` is
//!
//! `[X, Y]' = [X, Y] - K(X) Y + K(Y) X`.
//!
//! Killing the whole semisimple part gives the nilshadow; killing only its
//! compact (imaginary spectrum) part gives the algebra whose cohomology
//! computes the de Rham cohomology of the solvmanifold in the examples.

use num_traits::Zero;
use thiserror::Error;

use crate::lie::{is_nilpotent, verify_nilpotent_complement, LieAlgebra, LieError, Subspace};
use crate::linalg::sturm::is_totally_real;
use crate::linalg::{
    compact_components, jordan_chevalley, minimal_polynomial, split_compact_parts, LinalgError,
    Matrix, Rational, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("kill operators do not commute ({0}); the torus construction does not apply")]
    NonCommutingTorus(String),
    #[error("modified bracket with the full kill map is not nilpotent")]
    NotNilpotent,
    #[error("ad(A{}) still has non-real spectrum after the compact kill", .0 + 1)]
    ResidualCompactSpectrum(usize),
    #[error("selection refers to compact component {component} of K{}, which has {available}", .operator + 1)]
    InvalidSelection {
        operator: usize,
        component: usize,
        available: usize,
    },
    #[error("selection lists {found} operators, complement has {expected}")]
    SelectionLength { expected: usize, found: usize },
    #[error("Malcev splitting check failed: {0}")]
    SplittingCheck(&'static str),
}

/// `g`, an abelian complement `V` and a nilpotent ideal `n` that passed
/// [`verify_nilpotent_complement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingInput {
    g: LieAlgebra,
    v: Subspace,
    n: Subspace,
    /// Inverse of the matrix with columns `A_1..A_k, n_1..n_m`.
    coords: Matrix,
}

impl SplittingInput {
    pub fn new(g: LieAlgebra, v: Subspace, n: Subspace) -> Result<Self, SplittingError> {
        verify_nilpotent_complement(&g, &v, &n)?;
        let dim = g.dim();
        let mut cols: Vec<Vector> = v.basis().to_vec();
        cols.extend(n.basis().iter().cloned());
        let coords = Matrix::from_columns(dim, &cols)
            .inverse()
            .expect("V + n is a direct sum");
        Ok(Self { g, v, n, coords })
    }

    /// `V` spanned by the given basis indices, `n` by the remaining ones.
    pub fn from_complement_indices(
        g: LieAlgebra,
        complement: &[usize],
    ) -> Result<Self, SplittingError> {
        let dim = g.dim();
        let rest: Vec<usize> = (0..dim).filter(|i| !complement.contains(i)).collect();
        let v = Subspace::coordinate(dim, complement);
        let n = Subspace::coordinate(dim, &rest);
        Self::new(g, v, n)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn complement(&self) -> &Subspace {
        &self.v
    }

    pub fn nilpotent_ideal(&self) -> &Subspace {
        &self.n
    }

    /// Coordinates of `x` along `A_1..A_k`.
    pub fn v_coordinates(&self, x: &[Rational]) -> Vector {
        let all = self.coords.mul_vec(x);
        all[..self.v.dim()].to_vec()
    }

    fn semisimple_parts(&self) -> Vec<Matrix> {
        self.v
            .basis()
            .iter()
            .map(|a| jordan_chevalley(&self.g.ad_matrix(a)).semisimple)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KillMode {
    /// The whole semisimple part: yields the nilshadow.
    Full,
    /// The compact part of each semisimple part.
    CompactOnly,
    /// For each `A_i`, the chosen compact primary components (indices into
    /// [`compact_components`] of `ad(A_i)_s`).
    Selected(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillMap {
    pub operators: Vec<Matrix>,
    pub mode: KillMode,
}

impl KillMap {
    pub fn is_zero(&self) -> bool {
        self.operators.iter().all(Matrix::is_zero)
    }

    /// `K(X) = sum_i x_i K_i` for the V-coordinates `x` of `X`.
    pub fn apply(&self, input: &SplittingInput, x: &[Rational]) -> Matrix {
        let dim = input.g.dim();
        let mut out = Matrix::zero(dim, dim);
        for (c, k) in input.v_coordinates(x).iter().zip(&self.operators) {
            if !c.is_zero() {
                out = &out + &k.scale(c);
            }
        }
        out
    }
}

pub fn kill_map(input: &SplittingInput, mode: KillMode) -> Result<KillMap, SplittingError> {
    let semisimple = input.semisimple_parts();
    let operators: Vec<Matrix> = match &mode {
        KillMode::Full => semisimple.clone(),
        KillMode::CompactOnly => semisimple
            .iter()
            .map(|s| split_compact_parts(s).map(|p| p.compact))
            .collect::<Result<_, _>>()?,
        KillMode::Selected(selection) => {
            if selection.len() != semisimple.len() {
                return Err(SplittingError::SelectionLength {
                    expected: semisimple.len(),
                    found: selection.len(),
                });
            }
            let mut ops = Vec::new();
            for (i, (s, chosen)) in semisimple.iter().zip(selection).enumerate() {
                let comps = compact_components(s)?;
                let mut k = Matrix::zero(s.rows(), s.cols());
                for &c in chosen {
                    let comp = comps.get(c).ok_or(SplittingError::InvalidSelection {
                        operator: i,
                        component: c,
                        available: comps.len(),
                    })?;
                    k = &k + &comp.compact;
                }
                ops.push(k);
            }
            ops
        }
    };
    for (i, ki) in operators.iter().enumerate() {
        for (j, kj) in operators.iter().enumerate().skip(i + 1) {
            if !ki.commutes_with(kj) {
                return Err(SplittingError::NonCommutingTorus(format!(
                    "K{} and K{}",
                    i + 1,
                    j + 1
                )));
            }
        }
        for (j, sj) in semisimple.iter().enumerate() {
            if !ki.commutes_with(sj) {
                return Err(SplittingError::NonCommutingTorus(format!(
                    "K{} and ad(A{})_s",
                    i + 1,
                    j + 1
                )));
            }
        }
        for (j, a) in input.v.basis().iter().enumerate() {
            if !ki.mul_vec(a).iter().all(Zero::is_zero) {
                return Err(SplittingError::NonCommutingTorus(format!(
                    "K{} does not kill A{}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(KillMap { operators, mode })
}

/// How the output's coordinates relate to those of `g`: column `j` is the
/// image of `e_j`. The identity for modified brackets, `X -> (-X_V, X)` for
/// the Malcev splitting.
pub type Identification = Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingResult {
    pub output: LieAlgebra,
    pub kill: KillMap,
    pub identification: Identification,
}

fn modified_algebra(input: &SplittingInput, kill: &KillMap) -> LieAlgebra {
    let dim = input.g.dim();
    let units: Vec<Vector> = (0..dim)
        .map(|i| crate::lie::subspace::unit(dim, i))
        .collect();
    let k_of: Vec<Matrix> = units.iter().map(|e| kill.apply(input, e)).collect();
    let mut out = LieAlgebra::abelian(dim);
    for a in 0..dim {
        for b in a + 1..dim {
            let mut v = input.g.bracket_basis(a, b);
            let ka = k_of[a].mul_vec(&units[b]);
            let kb = k_of[b].mul_vec(&units[a]);
            for ((vi, x), y) in v.iter_mut().zip(&ka).zip(&kb) {
                *vi = &*vi - x + y;
            }
            out.set_bracket(a, b, &v);
        }
    }
    out
}

/// `[X, Y] - K(X) Y + K(Y) X` on the vector space of `g`.
pub fn modified_bracket(
    input: &SplittingInput,
    kill: &KillMap,
) -> Result<SplittingResult, SplittingError> {
    let output = modified_algebra(input, kill);
    output.validate()?;
    match kill.mode {
        KillMode::Full => {
            if !is_nilpotent(&output) {
                return Err(SplittingError::NotNilpotent);
            }
        }
        KillMode::CompactOnly => {
            for (i, a) in input.v.basis().iter().enumerate() {
                if !is_totally_real(&minimal_polynomial(&output.ad_matrix(a))) {
                    return Err(SplittingError::ResidualCompactSpectrum(i));
                }
            }
        }
        KillMode::Selected(_) => {}
    }
    let dim = input.g.dim();
    Ok(SplittingResult {
        output,
        kill: kill.clone(),
        identification: Matrix::identity(dim),
    })
}

/// Nilshadow: the modified bracket with the full kill map.
pub fn nilshadow(input: &SplittingInput) -> Result<SplittingResult, SplittingError> {
    let kill = kill_map(input, KillMode::Full)?;
    modified_bracket(input, &kill)
}

/// The `(k + n)`-dimensional algebra on `V + g` with
/// `[(A, X), (B, Y)] = (0, [X, Y] + ad(A)_s Y - ad(B)_s X)`. Coordinates are
/// `A_1..A_k` first, then `e_1..e_n`. The returned identification embeds the
/// nilshadow as `X -> (-X_V, X)`; it is checked to be an ideal whose induced
/// bracket is the nilshadow bracket.
pub fn malcev_splitting(input: &SplittingInput) -> Result<SplittingResult, SplittingError> {
    let kill = kill_map(input, KillMode::Full)?;
    let k = input.v.dim();
    let n = input.g.dim();
    let total = k + n;
    let mut m = LieAlgebra::abelian(total);
    for (i, s) in kill.operators.iter().enumerate() {
        for j in 0..n {
            let mut v = vec![Rational::zero(); total];
            for (r, val) in s.column(j).into_iter().enumerate() {
                v[k + r] = val;
            }
            m.set_bracket(i, k + j, &v);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut v = vec![Rational::zero(); total];
            for (r, val) in input.g.bracket_basis(a, b).into_iter().enumerate() {
                v[k + r] = val;
            }
            m.set_bracket(k + a, k + b, &v);
        }
    }
    m.validate()?;

    let mut embed = Matrix::zero(total, n);
    for j in 0..n {
        let e = crate::lie::subspace::unit(n, j);
        for (i, c) in input.v_coordinates(&e).into_iter().enumerate() {
            embed[(i, j)] = -c;
        }
        embed[(k + j, j)] = Rational::from_integer(1.into());
    }
    let shadow = modified_bracket(input, &kill)?.output;
    let columns: Vec<Vector> = (0..n).map(|j| embed.column(j)).collect();
    let u = Subspace::span(total, &columns);
    for (a, ua) in columns.iter().enumerate() {
        for (b, ub) in columns.iter().enumerate().skip(a + 1) {
            let br = m.bracket(ua, ub);
            if br != embed.mul_vec(&shadow.bracket_basis(a, b)) {
                return Err(SplittingError::SplittingCheck(
                    "induced bracket differs from the nilshadow bracket",
                ));
            }
        }
        for x in 0..total {
            if !u.contains(&m.bracket(&crate::lie::subspace::unit(total, x), ua)) {
                return Err(SplittingError::SplittingCheck(
                    "embedded nilshadow is not an ideal",
                ));
            }
        }
    }
    if !is_nilpotent(&shadow) {
        return Err(SplittingError::NotNilpotent);
    }
    Ok(SplittingResult {
        output: m,
        kill,
        identification: embed,
    })
}
