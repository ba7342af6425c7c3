//! Exact computations for solvable Lie algebras and solvmanifolds.

#![allow(clippy::result_large_err)]

pub mod almost_abelian;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod splitting;
