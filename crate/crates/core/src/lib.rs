//! Exact arithmetic for super Catalan moment problems.
//!
//! The crate builds generalized Lucas, Fibonacci and Chebyshev polynomial
//! families together with their q-analogues, computes the moments of the
//! associated linear functionals (normalized super Catalan numbers and
//! their q-versions), and verifies a registry of summation identities
//! exactly, over the rationals and over the field of rational functions
//! in `q`.

pub mod algebra;
pub mod cli;
pub mod families;
pub mod identities;
pub mod lattice;
pub mod scalar;
