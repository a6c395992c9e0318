//! Exact arithmetic of factorization lengths in numerical monoids.
//!
//! A numerical monoid is a cofinite additive submonoid of the nonnegative
//! integers. Every element factors into sums of the monoid's atoms, usually
//! in several ways; this crate computes the resulting sets of factorization
//! lengths and the invariants built from them — sets of distances,
//! almost-arithmetic-progression decompositions, iterated sumsets — all in
//! checked 64-bit integer arithmetic, no floating point anywhere.
//!
//! The `verify` module layers witness-driven checks on top: it decides
//! exactly whether a singleton `{k}` occurs as a set of lengths, sweeps
//! witness families, and intersects systems of sets of lengths across
//! monoid collections.

pub mod error;
pub mod families;
pub mod intervals;
pub mod invariants;
pub mod lengths;
pub mod monoid;
pub mod verify;

pub use error::{Error, Result};
pub use intervals::IntervalSet;
pub use invariants::{AapDecomposition, DeltaSet};
pub use lengths::{Factorization, LengthSet};
pub use monoid::NumericalMonoid;
pub use verify::{ClaimId, Counterexample, VerificationReport, VerifyStatus, Witness};
