#![allow(dead_code)]

pub mod oracle;
pub mod props;

use proptest::prelude::*;
use proptest::strategy::BoxedStrategy;

use solvco::almost_abelian::almost_abelian_algebra;
use solvco::catalog::catalog_get;
use solvco::lie::LieAlgebra;
use solvco::linalg::rational::frac;
use solvco::linalg::{Matrix, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=2).prop_map(|(p, q)| frac(p, q))
}

pub fn small_int() -> impl Strategy<Value = Rational> {
    (-2i64..=2).prop_map(|p| frac(p, 1))
}

pub fn int_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(|x| frac(x, 1)).collect()))
}

/// Unit lower triangular times upper triangular with nonzero diagonal.
pub fn invertible_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    let off = n * (n - 1) / 2;
    (
        prop::collection::vec(small_rational(), off),
        prop::collection::vec(small_rational(), off),
        prop::collection::vec(prop_oneof![(1i64..=3), (-3i64..=-1)], n),
    )
        .prop_map(move |(lo, up, diag)| {
            let mut l = Matrix::identity(n);
            let mut u = Matrix::zero(n, n);
            let (mut a, mut b) = (0, 0);
            for i in 0..n {
                u[(i, i)] = frac(diag[i], 1);
                for j in 0..n {
                    if j < i {
                        l[(i, j)] = lo[a].clone();
                        a += 1;
                    } else if j > i {
                        u[(i, j)] = up[b].clone();
                        b += 1;
                    }
                }
            }
            &l * &u
        })
}

/// `R x_D R^n` with a random `D`, total dimension at most 5.
pub fn almost_abelian() -> impl Strategy<Value = LieAlgebra> {
    (1usize..=4)
        .prop_flat_map(int_matrix)
        .prop_map(|d| almost_abelian_algebra(&d))
}

/// 2-step nilpotent: `[x_i, x_j] = sum_k a_ijk z_k`.
pub fn two_step_nilpotent() -> impl Strategy<Value = LieAlgebra> {
    (2usize..=3, 1usize..=2).prop_flat_map(|(m, c)| {
        let pairs = m * (m - 1) / 2;
        prop::collection::vec(small_int(), pairs * c).prop_map(move |coeffs| {
            let dim = m + c;
            let mut g = LieAlgebra::abelian(dim);
            let mut idx = 0;
            for i in 0..m {
                for j in i + 1..m {
                    let mut v = vec![frac(0, 1); dim];
                    for k in 0..c {
                        v[m + k] = coeffs[idx].clone();
                        idx += 1;
                    }
                    g.set_bracket(i, j, &v);
                }
            }
            g
        })
    })
}

pub const SMALL_CATALOG: &[&str] = &[
    "abelian3",
    "abelian5",
    "heisenberg3",
    "hyperelliptic4",
    "rot3",
    "sol3",
];

/// A catalog entry of dimension at most 5 in a random rational basis.
pub fn conjugated_catalog() -> impl Strategy<Value = LieAlgebra> {
    prop::sample::select(SMALL_CATALOG).prop_flat_map(|name| {
        let g = catalog_get(name).unwrap().algebra;
        let n = g.dim();
        invertible_matrix(n)
            .prop_map(move |p| g.change_basis(&p).expect("invertible change of basis"))
    })
}

pub fn lie_algebra() -> BoxedStrategy<LieAlgebra> {
    prop_oneof![almost_abelian(), two_step_nilpotent(), conjugated_catalog()].boxed()
}

/// Direct sums of Jordan blocks with small integer eigenvalues, conjugated.
pub fn jordan_type_matrix() -> impl Strategy<Value = Matrix> {
    prop::collection::vec((-2i64..=2, 1usize..=2), 1..=3).prop_flat_map(|blocks| {
        let n: usize = blocks.iter().map(|b| b.1).sum();
        let mut m = Matrix::zero(n, n);
        let mut at = 0;
        for (ev, size) in &blocks {
            for i in 0..*size {
                m[(at + i, at + i)] = frac(*ev, 1);
                if i + 1 < *size {
                    m[(at + i, at + i + 1)] = frac(1, 1);
                }
            }
            at += size;
        }
        invertible_matrix(n).prop_map(move |p| &(&p * &m) * &p.inverse().unwrap())
    })
}

pub fn any_matrix() -> BoxedStrategy<Matrix> {
    prop_oneof![(1usize..=4).prop_flat_map(int_matrix), jordan_type_matrix()].boxed()
}

/// Semisimple with rational eigenvalues and rotation blocks
/// `[[a, -b], [b, a]]`, conjugated.
pub fn semisimple_splittable() -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(small_int(), 0..=2),
        prop::collection::vec((small_int(), prop_oneof![(1i64..=2), (-2i64..=-1)]), 0..=1),
    )
        .prop_filter("nonempty", |(r, c)| !r.is_empty() || !c.is_empty())
        .prop_flat_map(|(reals, rots)| {
            let n = reals.len() + 2 * rots.len();
            let mut m = Matrix::zero(n, n);
            for (i, r) in reals.iter().enumerate() {
                m[(i, i)] = r.clone();
            }
            for (j, (a, b)) in rots.iter().enumerate() {
                let o = reals.len() + 2 * j;
                m[(o, o)] = a.clone();
                m[(o + 1, o + 1)] = a.clone();
                m[(o, o + 1)] = frac(-*b, 1);
                m[(o + 1, o)] = frac(*b, 1);
            }
            invertible_matrix(n).prop_map(move |p| &(&p * &m) * &p.inverse().unwrap())
        })
}

/// Strictly upper triangular, conjugated.
pub fn nilpotent_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(|n| {
        (
            prop::collection::vec(small_rational(), n * n),
            invertible_matrix(n),
        )
            .prop_map(move |(v, p)| {
                let mut m = Matrix::zero(n, n);
                for i in 0..n {
                    for j in i + 1..n {
                        m[(i, j)] = v[i * n + j].clone();
                    }
                }
                &(&p * &m) * &p.inverse().unwrap()
            })
    })
}

/// `D` upper triangular with rational diagonal: every `ad` has real
/// spectrum in `R x_D R^n`.
pub fn completely_solvable_almost_abelian() -> impl Strategy<Value = LieAlgebra> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(small_rational(), n * n).prop_map(move |v| {
            let mut d = Matrix::zero(n, n);
            for i in 0..n {
                for j in i..n {
                    d[(i, j)] = v[i * n + j].clone();
                }
            }
            almost_abelian_algebra(&d)
        })
    })
}

/// Integer matrices of finite order: blocks of companion matrices of
/// `Phi_d`, `d` in {1,2,3,4,6}, conjugated by a unimodular matrix.
pub fn finite_order_holonomy() -> impl Strategy<Value = Matrix> {
    let block = prop::sample::select(&[1usize, 2, 3, 4, 6][..]);
    (
        prop::collection::vec(block, 1..=3),
        prop::collection::vec((0usize..4, 0usize..4, -1i64..=1), 0..4),
    )
        .prop_map(|(orders, moves)| {
            let blocks: Vec<Matrix> = orders
                .iter()
                .map(|d| match d {
                    1 => Matrix::from_ints(&[[1]]),
                    2 => Matrix::from_ints(&[[-1]]),
                    3 => Matrix::from_ints(&[[0, -1], [1, -1]]),
                    4 => Matrix::from_ints(&[[0, -1], [1, 0]]),
                    _ => Matrix::from_ints(&[[0, -1], [1, 1]]),
                })
                .collect();
            let mut b = blocks[0].clone();
            for x in &blocks[1..] {
                b = b.direct_sum(x);
            }
            let n = b.rows();
            let mut p = Matrix::identity(n);
            for (i, j, c) in moves {
                let (i, j) = (i % n, j % n);
                if i != j {
                    let mut e = Matrix::identity(n);
                    e[(i, j)] = frac(c, 1);
                    p = &p * &e;
                }
            }
            &(&p * &b) * &p.inverse().unwrap()
        })
        .prop_filter("dimension at most 4", |b| b.rows() <= 4)
}
