//! Exact rational combinatorics.
//!
//! Every value produced here is an exact [`Rational`] or [`Integer`]; no
//! rounding happens anywhere in this module. The caches behind
//! [`harmonic`] and [`stirling1`] are internally synchronized and invisible
//! to callers.

mod bell;
mod composition;
mod harmonic;
mod mhs;
mod partial_fraction;
mod stirling;

pub use bell::{bell_y, bell_y_closed};
pub use composition::{parse_composition, Composition};
pub use harmonic::{harmonic, HarmonicVector};
pub use mhs::{mhs_star, mhs_star_weighted_exact};
pub use partial_fraction::{binom_recip_coeffs, binomial};
pub use stirling::{factorial, stirling1, stirling1_closed};

pub use rug::{Integer, Rational};
