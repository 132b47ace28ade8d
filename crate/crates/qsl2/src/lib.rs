//! Exact computation of the universal sl2 invariant of bottom tangles, colored
//! Jones polynomials of their closures, and cyclotomic divisibility checks.
//!
//! The crate is organized as a stack:
//! - [`qarith`]: exact Laurent-polynomial arithmetic in `v` (with `v^4 = q`),
//!   rational Laurent fractions, q-combinatorics, and cyclotomic factorization.
//! - [`diagram`]: sliced tangle diagrams, parsing, strand tracing, linking
//!   matrices, and the boundary-data constructions.
//! - [`algebra`]: the symbolic engine for tensor powers of U_q(sl2) in PBW form
//!   with formal D-matrix prefixes, Hopf structure, and commutator maps.
//! - [`repn`]: finite-dimensional irreducible representations, evaluation,
//!   quantum traces, and the representation ring.
//! - [`invariant`]: the state-sum universal invariant, colored Jones evaluation
//!   by tensor transfer, and the per-state subalgebra membership test.
//! - [`divisibility`]: the ideals I_l, product ideals with cyclotomic principal
//!   bounds, and three-valued membership verdicts.

pub mod algebra;
pub mod cli;
pub mod diagram;
pub mod divisibility;
pub mod invariant;
pub mod qarith;
pub mod repn;
