//! Rank-2 reflexive sheaves on projective 3-space with small `c2`.
//!
//! Chern arithmetic and spectra, forced cohomology tables checked against a
//! golden corpus, curves from Serre's construction with their liaison
//! bookkeeping, and an atlas of moduli components whose dimensions are
//! recomputed by [`atlas::Atlas::verify`]. [`regression::run_regression`]
//! runs all of it.

pub mod atlas;
pub mod chow;
pub mod cohomtable;
pub mod curves;
pub mod expr;
pub mod golden;
pub mod liaison;
pub mod regression;
pub mod spectrum;
