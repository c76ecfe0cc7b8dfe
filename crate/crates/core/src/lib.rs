//! Exact construction of degenerate Bernoulli, Euler and Genocchi numbers and
//! polynomials, degenerate Euler–Seidel matrices, and a verification suite
//! that checks the identities relating them as exact polynomial identities in
//! `x` and `λ`.
//!
//! Everything is computed over the rationals; `λ` stays a formal variable
//! unless explicitly substituted.

pub mod algebra;
pub mod classical;
mod error;
pub mod seidel;
pub mod sequences;
pub mod verify;

pub use algebra::{BiPoly, EgfSeries, Rational};
pub use error::{Error, Result};
pub use seidel::{Mode, SeidelMatrix};
pub use sequences::{Route, SequenceKind, SequenceTable};
pub use verify::{CheckResult, Status, VerificationReport};
