//! Exact computation of product-set growth in the infinite dihedral group.
//!
//! The infinite dihedral group is the isometry group of the integers: every
//! element acts as `x -> b*x + a` with `a` an integer shift and `b = ±1` an
//! orientation. Given a size-`k` subset `S` with exactly `p` reflections
//! (orientation `-1`) and `k - p` translations, the quantity of interest is
//! the maximal size of the product set `S^n = {s_1 ... s_n : s_i in S}` over
//! all such subsets.
//!
//! The crate is organised around three independent routes to that number:
//!
//! * [`counting`] — closed-form formulas and generating-function series, all
//!   in exact big-integer arithmetic;
//! * [`oracle`] — brute-force enumeration of product sets and of attainable
//!   multiplicity vectors, used as ground truth;
//! * [`asymptotics`] — exact leading coefficients for fixed `k`, and the
//!   diagonal growth exponent `3 + 2*sqrt(2)` with exact two-sided bounds.
//!
//! [`dihedral`] holds the group arithmetic and the word-profile machinery,
//! and [`generic`] constructs the canonical maximising subsets.

pub mod asymptotics;
pub mod counting;
pub mod dihedral;
pub mod generic;
pub mod oracle;

mod error;

pub use error::{Error, Result};

/// Unbounded nonnegative integer used for all counts and growth values.
pub type Count = num_bigint::BigUint;
