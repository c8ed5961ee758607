//! Exact arithmetic for one-dimensional numerical semigroup rings `k[[H]]`.
//!
//! Everything is modelled on exponent sets: a numerical semigroup `H` stands
//! for the ring `R = k[[H]]`, a relative ideal `E ⊆ ℤ` with `E + H ⊆ E`
//! stands for the monomial fractional ideal it spans, and ideal products,
//! colons and lengths become Minkowski sums, set colons and counts.
//!
//! On top of that arithmetic the crate computes the canonical ideal `K`, the
//! blow-up `S = R[K]`, the conductor `R:S`, the canonical trace `(R:K)K`, and
//! decides the Gorenstein / almost Gorenstein (AGL) / generalized Gorenstein
//! (GGL) / 2-AGL / nearly Gorenstein (NGL) properties. GGL is decided by three
//! independent routes whose agreement is recorded in every report.
//!
//! Further modules test and enumerate monomial Ulrich ideals ([`ulrich`]),
//! iterate the endomorphism algebra of the maximal ideal ([`chain`]), treat
//! three-generated semigroups through their determinantal exponents
//! ([`herzog`]), decide the GGL property of idealizations ([`idealization`])
//! and bundle every cross-check into one verification pass ([`verify`]).

mod bitset;
pub mod chain;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod herzog;
pub mod ideal;
pub mod idealization;
pub mod semigroup;
pub mod ulrich;
pub mod verify;

pub use classify::{analyze, classify, CanonicalData, ClassificationReport, GglWitness};
pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use semigroup::{BasicInvariants, NumericalSemigroup};
pub use ulrich::{UlrichCertificate, UlrichFailure};
