//! Reference computations that share no code paths with the library
//! routines they check.

use num_traits::{One, Zero};

use solvco::lie::LieAlgebra;
use solvco::linalg::rational::frac;
use solvco::linalg::{Matrix, Rational};

/// Plain Gaussian elimination on a list of rows.
pub fn gauss_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot;
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

/// Cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Largest `k` with a nonzero `k x k` minor.
pub fn rank_by_minors(m: &Matrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let sub: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect();
                if !det_cofactor(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// `e^S(v_1, ..., v_k)` for basis vectors `v_i = e_{args[i]}`.
fn eval_basis_form(s: &[usize], args: &[usize]) -> i64 {
    let mut sorted = args.to_vec();
    sorted.sort_unstable();
    if sorted != s {
        return 0;
    }
    let mut sign = 1;
    let mut a = args.to_vec();
    for i in 0..a.len() {
        for j in 0..a.len() - 1 - i {
            if a[j] > a[j + 1] {
                a.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// Matrix of `d: Lambda^k -> Lambda^{k+1}` from
/// `d a(x_0..x_k) = sum_{i<j} (-1)^{i+j} a([x_i, x_j], x_0..^i..^j..x_k)`.
pub fn ce_differential(g: &LieAlgebra, k: usize) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let sources = subsets(n, k);
    let targets = subsets(n, k + 1);
    targets
        .iter()
        .map(|t| {
            sources
                .iter()
                .map(|s| {
                    let mut total = Rational::zero();
                    for i in 0..t.len() {
                        for j in i + 1..t.len() {
                            let rest: Vec<usize> = t
                                .iter()
                                .enumerate()
                                .filter(|(p, _)| *p != i && *p != j)
                                .map(|(_, &x)| x)
                                .collect();
                            let bracket = g.bracket_basis(t[i], t[j]);
                            for (l, c) in bracket.iter().enumerate() {
                                if c.is_zero() {
                                    continue;
                                }
                                let mut args = vec![l];
                                args.extend(&rest);
                                let v = eval_basis_form(s, &args);
                                if v != 0 {
                                    let term =
                                        c * frac(v * if (i + j) % 2 == 0 { 1 } else { -1 }, 1);
                                    total += term;
                                }
                            }
                        }
                    }
                    total
                })
                .collect()
        })
        .collect()
}

pub fn betti_oracle(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let ranks: Vec<usize> = (0..=n)
        .map(|k| {
            if k == n {
                0
            } else {
                gauss_rank(ce_differential(g, k))
            }
        })
        .collect();
    (0..=n)
        .map(|k| {
            let dim_k = subsets(n, k).len();
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            dim_k - ranks[k] - incoming
        })
        .collect()
}

/// Averaging over the cyclic group generated by `M = 1 + B^T`:
/// `dim Fix(Lambda^k) = (1/m) sum_j e_k(M^j)`, with `e_k` read off the
/// characteristic polynomial.
pub fn molien_invariant_betti(b: &Matrix, m: usize) -> Vec<usize> {
    let action = Matrix::identity(1).direct_sum(&b.transpose());
    let n = action.rows();
    let mut sums = vec![Rational::zero(); n + 1];
    let mut power = Matrix::identity(n);
    for _ in 0..m {
        let cp = power.char_poly();
        for (k, slot) in sums.iter_mut().enumerate() {
            let c = cp.coeff(n - k);
            *slot += if k % 2 == 0 { c } else { -c };
        }
        power = &power * &action;
    }
    sums.into_iter()
        .map(|s| {
            let avg = s / frac(m as i64, 1);
            assert!(avg.is_integer(), "Molien average must be an integer");
            avg.to_integer().try_into().expect("nonnegative")
        })
        .collect()
}

/// Left-invariant forms of `R^2 x_phi R^4` with
/// `phi(t) = exp(t_1 D_1 + t_2 D_2)`: `dt_i` and `theta = phi(-t) dx`,
/// so `d theta = -sum_i dt_i ^ D_i theta`. `D_1 = diag(1, 1, -1, -1)`;
/// `D_2` is multiplication by `i` on `x_3 + i x_4` and by `-i` on
/// `x_5 + i x_6`, or zero when `rotation` is false.
pub fn nakamura_maurer_cartan(rotation: bool) -> LieAlgebra {
    let d1 = Matrix::diagonal(&[frac(1, 1), frac(1, 1), frac(-1, 1), frac(-1, 1)]);
    let d2 = if rotation {
        Matrix::from_ints(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    } else {
        Matrix::zero(4, 4)
    };
    let mut equations = vec![Vec::new(), Vec::new()];
    for a in 0..4 {
        let mut terms = Vec::new();
        for (i, d) in [&d1, &d2].into_iter().enumerate() {
            for b in 0..4 {
                let c = &d[(a, b)];
                if !c.is_zero() {
                    terms.push((-c.clone(), i, 2 + b));
                }
            }
        }
        equations.push(terms);
    }
    LieAlgebra::from_differentials(6, &equations)
}
