//! Exact arithmetic foundation: Laurent polynomials in `v` (with `v^4 = q`),
//! reduced rational fractions of those, q-combinatorics, and cyclotomic
//! factorization.
//!
//! A single variable `v` houses `q = v^4`, `q^{1/2} = v^2`, and `q^{1/4} = v`,
//! so both the `e = (q^{1/2}-q^{-1/2})E` rescaling and the evaluation of
//! `q^{H\otimes H/4}` on integer weights live in one ring.

mod cyclo;
mod laurent;
mod qcombin;
mod rational;

pub use cyclo::{cyclotomic, divides, factor_cyclotomic, CycloFactorization};
pub use laurent::{LaurentParseError, LaurentPoly};
pub use qcombin::{
    qbinom, qbrace, qbrace_falling, qfact, qint, qint_balanced, qintfact,
};
pub use rational::RationalLaurent;

/// Error type for the arithmetic layer.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QArithError {
    #[error("exact division left a remainder")]
    InexactDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}
