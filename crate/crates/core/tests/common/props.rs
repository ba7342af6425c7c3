use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use super::oracle::{betti_oracle, molien_invariant_betti, rank_by_minors};
use super::*;
use solvco::almost_abelian::{b1_lattice, invariant_betti, torus_cover, HolonomyInput};
use solvco::cohomology::{build_complex_unchecked, cohomology, structural_checks, ComplexOptions};
use solvco::lie::flag::chain_is_flag_of_ideals;
use solvco::lie::{completely_solvable_flag, is_unimodular, FlagStatus};
use solvco::linalg::cyclotomic::cyclotomic_factors;
use solvco::linalg::jordan::semisimple_polynomial;
use solvco::linalg::sturm::is_totally_real;
use solvco::linalg::{
    cyclotomic_polynomial, jordan_chevalley, log_unipotent, minimal_polynomial, rank_and_kernel,
    split_compact_parts, sturm_real_root_count, Bound, Polynomial,
};
use solvco::splitting::{kill_map, modified_bracket, nilshadow, KillMode, SplittingInput};

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub type Suite = (&'static str, fn(u32) -> Result<(), String>);

/// Randomized suites; each takes the number of cases to run.
pub const SUITES: &[Suite] = &[
    ("jacobi iff d^2 = 0", jacobi_iff_d_squared_zero),
    ("Jordan-Chevalley invariants", jordan_chevalley_invariants),
    ("split/compact invariants", split_compact_invariants),
    (
        "Betti invariance under change of basis",
        betti_basis_invariance,
    ),
    ("duality iff unimodular", duality_iff_unimodular),
    ("Euler characteristic zero", euler_characteristic_zero),
    (
        "Betti numbers match the evaluation-formula oracle",
        betti_matches_oracle,
    ),
    ("rank and kernel match the minor oracle", rank_kernel_oracle),
    ("cyclotomic detection on Phi_d * q", cyclotomic_detection),
    ("log/exp round trip", log_exp_round_trip),
    ("lattice Betti consistency", lattice_betti_consistency),
    (
        "compact kill is the identity on completely solvable input",
        compact_kill_identity,
    ),
    ("completely solvable flag certificates", flag_certificates),
];

pub fn jacobi_iff_d_squared_zero(cases: u32) -> Result<(), String> {
    let perturbed = (
        lie_algebra(),
        0usize..5,
        0usize..5,
        0usize..5,
        small_rational(),
        any::<bool>(),
    );
    run(cases, perturbed, |(g, k, i, j, r, perturb)| {
        let n = g.dim();
        let mut g2 = g.clone();
        let (k, i, j) = (k % n, i % n, j % n);
        if perturb && i != j {
            let mut v = g.bracket_basis(i, j);
            v[k] += r;
            g2.set_bracket(i, j, &v);
        }
        let cx = build_complex_unchecked(&g2, ComplexOptions::default()).unwrap();
        prop_assert_eq!(g2.validate().is_ok(), cx.first_nonzero_square().is_none());
        if !perturb {
            prop_assert!(cx.first_nonzero_square().is_none());
        }
        Ok(())
    })
}

pub fn jordan_chevalley_invariants(cases: u32) -> Result<(), String> {
    run(cases, any_matrix(), |m| {
        let jc = jordan_chevalley(&m);
        let (s, nil) = (&jc.semisimple, &jc.nilpotent);
        prop_assert_eq!(&(s + nil), &m);
        prop_assert!(s.commutes_with(nil));
        prop_assert!(nil.is_nilpotent());
        prop_assert!(minimal_polynomial(s).is_squarefree());
        prop_assert_eq!(&semisimple_polynomial(&m).eval_matrix(&m), s);
        let again = jordan_chevalley(s);
        prop_assert_eq!(&again.semisimple, s);
        prop_assert!(again.nilpotent.is_zero());
        prop_assert_eq!(s.char_poly(), m.char_poly());
        Ok(())
    })
}

pub fn split_compact_invariants(cases: u32) -> Result<(), String> {
    run(cases, semisimple_splittable(), |s| {
        let parts = split_compact_parts(&s).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let (sp, cp) = (&parts.split, &parts.compact);
        prop_assert_eq!(&(sp + cp), &s);
        prop_assert!(sp.commutes_with(cp));
        prop_assert!(sp.commutes_with(&s));
        prop_assert!(is_totally_real(&minimal_polynomial(sp)));
        prop_assert!(minimal_polynomial(sp).is_squarefree());
        prop_assert!(minimal_polynomial(cp).is_squarefree());
        let sq = (cp * cp).char_poly();
        prop_assert!(is_totally_real(&sq));
        prop_assert_eq!(
            sturm_real_root_count(&sq, &Bound::Finite(frac(0, 1)), &Bound::PosInfinity),
            0
        );
        let trace_sq = (cp * cp).trace();
        prop_assert!(!trace_sq.is_positive());
        Ok(())
    })
}

fn with_basis_change() -> impl Strategy<Value = (LieAlgebra, Matrix)> {
    lie_algebra().prop_flat_map(|g| {
        let n = g.dim();
        (Just(g), invertible_matrix(n))
    })
}

pub fn betti_basis_invariance(cases: u32) -> Result<(), String> {
    run(cases, with_basis_change(), |(g, p)| {
        let h = g.change_basis(&p).unwrap();
        prop_assert!(h.validate().is_ok());
        prop_assert_eq!(cohomology(&g).unwrap().betti, cohomology(&h).unwrap().betti);
        Ok(())
    })
}

pub fn duality_iff_unimodular(cases: u32) -> Result<(), String> {
    run(cases, lie_algebra(), |g| {
        let res = cohomology(&g).unwrap();
        let n = g.dim();
        let symmetric = (0..=n).all(|k| res.betti[k] == res.betti[n - k]);
        prop_assert_eq!(symmetric, is_unimodular(&g));
        let checks = structural_checks(&res, &g);
        prop_assert_eq!(checks.duality_consistent(), Some(true));
        prop_assert!(checks.all_ok());
        Ok(())
    })
}

pub fn euler_characteristic_zero(cases: u32) -> Result<(), String> {
    run(cases, lie_algebra(), |g| {
        prop_assert_eq!(cohomology(&g).unwrap().euler_characteristic(), 0);
        Ok(())
    })
}

pub fn betti_matches_oracle(cases: u32) -> Result<(), String> {
    run(cases, lie_algebra(), |g| {
        prop_assert_eq!(cohomology(&g).unwrap().betti, betti_oracle(&g));
        Ok(())
    })
}

pub fn rank_kernel_oracle(cases: u32) -> Result<(), String> {
    let shaped = (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(
            prop_oneof![3 => Just(frac(0, 1)), 2 => small_rational()],
            r * c,
        )
        .prop_map(move |v| Matrix::new(r, c, v))
    });
    run(cases, shaped, |m| {
        let (rank, kernel) = rank_and_kernel(&m);
        prop_assert_eq!(rank, rank_by_minors(&m));
        prop_assert_eq!(kernel.len(), m.cols() - rank);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        if !kernel.is_empty() {
            prop_assert_eq!(
                rank_by_minors(&Matrix::from_columns(m.cols(), &kernel)),
                kernel.len()
            );
        }
        Ok(())
    })
}

pub fn cyclotomic_detection(cases: u32) -> Result<(), String> {
    let input = (1usize..=12, prop::collection::vec(-3i64..=3, 1..=4));
    run(cases, input, |(d, q)| {
        let q = Polynomial::from_ints(&q);
        prop_assume!(!q.is_zero());
        let p = &cyclotomic_polynomial(d) * &q;
        let mult = |fs: &[(usize, usize)]| fs.iter().find(|f| f.0 == d).map_or(0, |f| f.1);
        let found = cyclotomic_factors(&p);
        prop_assert_eq!(mult(&found), mult(&cyclotomic_factors(&q)) + 1);
        let mut product = Polynomial::one();
        for (e, k) in &found {
            product = &product * &cyclotomic_polynomial(*e).pow(*k as u32);
        }
        prop_assert!(product.divides(&p));
        Ok(())
    })
}

pub fn log_exp_round_trip(cases: u32) -> Result<(), String> {
    run(cases, nilpotent_matrix(), |n| {
        let u = n.exp_nilpotent().unwrap();
        prop_assert_eq!(&log_unipotent(&u).unwrap(), &n);
        let mut shifted = u.clone();
        shifted.add_to_diagonal(&frac(-1, 1));
        prop_assert!(shifted.is_nilpotent());
        Ok(())
    })
}

pub fn lattice_betti_consistency(cases: u32) -> Result<(), String> {
    run(cases, finite_order_holonomy(), |b| {
        let inp = HolonomyInput::from_holonomy(b.clone()).unwrap();
        let cover = torus_cover(&inp).unwrap();
        let inv = invariant_betti(&inp, cover.m).unwrap();
        let n = b.rows();
        prop_assert_eq!(&inv, &molien_invariant_betti(&b, cover.m));
        prop_assert_eq!(inv[1], b1_lattice(&inp).unwrap());
        prop_assert_eq!(inv[0], 1);
        let det_one = b.determinant() == frac(1, 1);
        prop_assert_eq!(inv[n + 1] == 1, det_one);
        if det_one {
            prop_assert!((0..=n + 1).all(|k| inv[k] == inv[n + 1 - k]));
        }
        prop_assert_eq!(b.pow(cover.m as u64), Matrix::identity(n));
        Ok(())
    })
}

pub fn compact_kill_identity(cases: u32) -> Result<(), String> {
    run(cases, completely_solvable_almost_abelian(), |g| {
        let input = SplittingInput::from_complement_indices(g.clone(), &[0]).unwrap();
        let kill = kill_map(&input, KillMode::CompactOnly).unwrap();
        prop_assert!(kill.is_zero());
        prop_assert_eq!(&modified_bracket(&input, &kill).unwrap().output, &g);
        let shadow = nilshadow(&input).unwrap();
        prop_assert!(solvco::lie::is_nilpotent(&shadow.output));
        Ok(())
    })
}

pub fn flag_certificates(cases: u32) -> Result<(), String> {
    run(cases, completely_solvable_almost_abelian(), |g| {
        let cert = completely_solvable_flag(&g).unwrap();
        prop_assert_eq!(cert.status, FlagStatus::Yes);
        prop_assert!(chain_is_flag_of_ideals(&g, cert.chain.as_ref().unwrap()));
        Ok(())
    })
}
