//! Arbitrary-precision evaluation of alternating Euler-type harmonic number
//! sums, together with a catalog of closed-form identities that can be
//! checked numerically to a requested number of digits.
//!
//! The crate is layered:
//!
//! - [`exact`]: exact rational combinatorics (harmonic numbers, multiple
//!   harmonic star sums, Stirling numbers, Bell polynomials, partial fractions).
//! - [`numerics`]: MPFR-backed constants, polylogarithms, alternating series
//!   acceleration, tail-corrected summation and tanh-sinh quadrature.
//! - [`closedform`]: rational linear combinations of products of constants,
//!   and builders for the closed-form right-hand sides.
//! - [`reductions`]: numeric evaluation of the series and integrals that form
//!   the left-hand sides, and the binomial-coefficient reductions.
//! - [`catalog`]: the identity registry and the verification engine.
//! - [`cli`]: the `altsums` command-line front end.

pub mod catalog;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod exact;
pub mod numerics;
pub mod reductions;

pub use error::{Error, Result};
