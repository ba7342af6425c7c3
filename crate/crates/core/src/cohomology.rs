//! Chevalley-Eilenberg cohomology of a Lie algebra with trivial coefficients.
//!
//! `Lambda^k g*` is indexed by strictly increasing multi-indices in
//! lexicographic order. On generators the differential is
//! `d e^k = -sum_{i<j} c[k][i][j] e^{ij}` and it is extended as an
//! antiderivation:
//! `d(e^{i1...ik}) = sum_p (-1)^(p-1) e^{i1} ^ ... ^ d e^{ip} ^ ... ^ e^{ik}`.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::lie::series::{bracket_subspaces, is_nilpotent, is_solvable, is_unimodular};
use crate::lie::subspace::format_terms;
use crate::lie::{LieAlgebra, LieError, Subspace};
use crate::linalg::{Matrix, Rational, Vector};

pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("dimension {dim} exceeds the configured bound {bound}")]
    DimensionTooLarge { dim: usize, bound: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("d o d is nonzero from degree {degree}")]
    DifferentialNotSquareZero { degree: usize },
}

/// Strictly increasing generator indices, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        indices
            .windows(2)
            .all(|w| w[0] < w[1])
            .then_some(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// `e13`, `e245`; indices past 9 switch to `e{1,10}`.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        if self.0.iter().all(|&i| i < 9) {
            let digits: String = self.0.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "e{digits}")
        } else {
            let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "e{{{}}}", parts.join(","))
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn wedge_basis(n: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(MultiIndex(cur.clone()));
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - k + p) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// Sorts `seq` in place and returns the sign of the permutation, or `None`
/// when an index repeats.
fn sort_with_sign(seq: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..seq.len() {
        let mut j = i;
        while j > 0 && seq[j - 1] > seq[j] {
            seq.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(negative)
}

#[derive(Clone, Debug)]
pub struct CEComplex {
    algebra: LieAlgebra,
    bases: Vec<Vec<MultiIndex>>,
    /// `d[k]: Lambda^k -> Lambda^{k+1}` with rows indexed by `bases[k+1]`.
    d: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexOptions {
    pub max_dim: usize,
    /// Highest degree whose cohomology is wanted; `None` means all.
    pub max_degree: Option<usize>,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_MAX_DIM,
            max_degree: None,
        }
    }
}

impl CEComplex {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn basis(&self, k: usize) -> &[MultiIndex] {
        &self.bases[k]
    }

    /// Highest degree covered.
    pub fn top_degree(&self) -> usize {
        self.d.len() - 1
    }

    pub fn differential(&self, k: usize) -> &Matrix {
        &self.d[k]
    }

    /// First `k` with `d[k+1] d[k] != 0`.
    pub fn first_nonzero_square(&self) -> Option<usize> {
        (0..self.d.len().saturating_sub(1)).find(|&k| !(&self.d[k + 1] * &self.d[k]).is_zero())
    }

    pub fn is_full(&self) -> bool {
        self.top_degree() == self.algebra.dim()
    }
}

/// Builds the complex without validating the algebra; for a non-Lie tensor
/// the result has `d o d != 0`.
pub fn build_complex_unchecked(
    g: &LieAlgebra,
    options: ComplexOptions,
) -> Result<CEComplex, CohomologyError> {
    let n = g.dim();
    if n > options.max_dim {
        return Err(CohomologyError::DimensionTooLarge {
            dim: n,
            bound: options.max_dim,
        });
    }
    let top = options.max_degree.map_or(n, |d| d.min(n));
    // d[top] needs the basis one degree higher.
    let bases: Vec<Vec<MultiIndex>> = (0..=top + 1).map(|k| wedge_basis(n, k)).collect();
    let generator_d: Vec<Vec<(Rational, usize, usize)>> =
        (0..n).map(|k| g.differential(k)).collect();
    let mut d = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let target: HashMap<&MultiIndex, usize> = bases[k + 1]
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut m = Matrix::zero(bases[k + 1].len(), bases[k].len());
        for (col, mono) in bases[k].iter().enumerate() {
            for (p, &gen) in mono.0.iter().enumerate() {
                for (coeff, a, b) in &generator_d[gen] {
                    let mut seq = Vec::with_capacity(k + 1);
                    seq.extend_from_slice(&mono.0[..p]);
                    seq.push(*a);
                    seq.push(*b);
                    seq.extend_from_slice(&mono.0[p + 1..]);
                    let Some(negative) = sort_with_sign(&mut seq) else {
                        continue;
                    };
                    let flip = negative ^ (p % 2 == 1);
                    let row = target[&MultiIndex(seq)];
                    if flip {
                        m[(row, col)] -= coeff;
                    } else {
                        m[(row, col)] += coeff;
                    }
                }
            }
        }
        d.push(m);
    }
    Ok(CEComplex {
        algebra: g.clone(),
        bases,
        d,
    })
}

/// Validates the algebra, builds the complex and checks `d o d = 0`.
pub fn build_complex(
    g: &LieAlgebra,
    options: ComplexOptions,
) -> Result<CEComplex, CohomologyError> {
    if g.dim() > options.max_dim {
        return Err(CohomologyError::DimensionTooLarge {
            dim: g.dim(),
            bound: options.max_dim,
        });
    }
    g.validate()?;
    let cx = build_complex_unchecked(g, options)?;
    if let Some(degree) = cx.first_nonzero_square() {
        return Err(CohomologyError::DifferentialNotSquareZero { degree });
    }
    Ok(cx)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    /// `b_0, ..., b_top`.
    pub betti: Vec<usize>,
    /// Per degree, cocycles spanning a complement of the coboundaries.
    pub representatives: Vec<Vec<Vector>>,
    pub bases: Vec<Vec<MultiIndex>>,
    /// True when every degree up to `dim g` was computed.
    pub complete: bool,
}

impl CohomologyResult {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// A representative as `a1*e{I1} + a2*e{I2} + ...`.
    pub fn format_representative(&self, degree: usize, v: &[Rational]) -> String {
        let terms: Vec<(Rational, String)> = v
            .iter()
            .zip(&self.bases[degree])
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| (c.clone(), m.to_string()))
            .collect();
        format_terms(&terms)
    }
}

struct DegreeData {
    kernel_rank: usize,
    image_rank: usize,
    representatives: Vec<Vector>,
}

fn degree_data(cx: &CEComplex, k: usize) -> DegreeData {
    let (_, kernel) = cx.d[k].rank_and_kernel();
    let dim_k = cx.bases[k].len();
    let boundaries = if k == 0 {
        Subspace::zero(dim_k)
    } else {
        let prev = &cx.d[k - 1];
        let cols: Vec<Vector> = (0..prev.cols()).map(|j| prev.column(j)).collect();
        Subspace::span(dim_k, &cols)
    };
    // Reduce each cocycle modulo the echelon basis of the boundaries, then
    // take the echelon basis of what remains.
    let reduced: Vec<Vector> = kernel.iter().map(|z| boundaries.reduce(z)).collect();
    let complement = Subspace::span(dim_k, &reduced);
    DegreeData {
        kernel_rank: kernel.len(),
        image_rank: boundaries.dim(),
        representatives: complement.basis().to_vec(),
    }
}

/// `b_k = dim ker d[k] - rank d[k-1]`. Degrees are computed on separate
/// threads.
pub fn betti_numbers(cx: &CEComplex) -> CohomologyResult {
    let top = cx.top_degree();
    let data: Vec<DegreeData> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..=top)
            .map(|k| scope.spawn(move || degree_data(cx, k)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("degree worker panicked"))
            .collect()
    });
    let mut betti = Vec::with_capacity(top + 1);
    let mut representatives = Vec::with_capacity(top + 1);
    for dd in data {
        debug_assert_eq!(dd.kernel_rank - dd.image_rank, dd.representatives.len());
        betti.push(dd.kernel_rank - dd.image_rank);
        representatives.push(dd.representatives);
    }
    CohomologyResult {
        betti,
        representatives,
        bases: cx.bases[..=top].to_vec(),
        complete: cx.is_full(),
    }
}

/// Convenience: validated full computation.
pub fn cohomology(g: &LieAlgebra) -> Result<CohomologyResult, CohomologyError> {
    Ok(betti_numbers(&build_complex(g, ComplexOptions::default())?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub unimodular: bool,
    /// `b_k = b_{n-k}` for all k; `None` for a truncated computation.
    pub duality_holds: Option<bool>,
    pub euler_characteristic: Option<i64>,
    pub b1: Option<usize>,
    /// `n - dim [g,g]`.
    pub b1_from_derived: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    /// `b_1 >= 2` for nilpotent, `b_1 >= 1` for solvable algebras.
    pub b1_bound_holds: Option<bool>,
}

impl StructuralReport {
    /// Duality is expected exactly for unimodular algebras.
    pub fn duality_consistent(&self) -> Option<bool> {
        self.duality_holds.map(|d| d == self.unimodular)
    }

    pub fn euler_zero(&self) -> Option<bool> {
        self.euler_characteristic.map(|e| e == 0)
    }

    pub fn b1_consistent(&self) -> Option<bool> {
        self.b1.map(|b| b == self.b1_from_derived)
    }

    /// Every check that applies came out as expected.
    pub fn all_ok(&self) -> bool {
        [
            self.duality_consistent(),
            self.euler_zero(),
            self.b1_consistent(),
            self.b1_bound_holds,
        ]
        .into_iter()
        .all(|c| c != Some(false))
    }
}

pub fn structural_checks(res: &CohomologyResult, g: &LieAlgebra) -> StructuralReport {
    let n = g.dim();
    let whole = Subspace::whole(n);
    let derived = bracket_subspaces(g, &whole, &whole);
    let solvable = is_solvable(g);
    let nilpotent = is_nilpotent(g);
    let b1 = res.betti.get(1).copied();
    let full = res.complete && res.betti.len() == n + 1;
    let duality_holds = full.then(|| (0..=n).all(|k| res.betti[k] == res.betti[n - k]));
    let euler_characteristic = (full && n >= 1).then(|| res.euler_characteristic());
    let b1_bound_holds = b1.and_then(|b| {
        if nilpotent {
            Some(b >= 2 || n < 2)
        } else if solvable {
            Some(b >= 1)
        } else {
            None
        }
    });
    StructuralReport {
        unimodular: is_unimodular(g),
        duality_holds,
        euler_characteristic,
        b1,
        b1_from_derived: n - derived.dim(),
        solvable,
        nilpotent,
        b1_bound_holds,
    }
}
