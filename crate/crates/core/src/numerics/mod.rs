//! Arbitrary-precision real arithmetic on top of MPFR.
//!
//! Results are [`BigFloat`] values carrying the working precision of the
//! [`PrecisionConfig`] that produced them. Error bounds reported in
//! [`ValueWithError`] are heuristic: inter-order differences for series
//! acceleration, inter-window differences for tail fits, inter-level
//! differences for quadrature.

mod accel;
mod constants;
mod quad;
mod stream;
mod tail;
mod weighted;

pub use accel::{accelerate_alternating, euler_alternating};
pub use constants::{eta_int, li_half, ln2, polylog, polylog_rational, zeta_int};
pub use quad::quad_de;
pub use stream::HarmonicStream;
pub use tail::{sum_with_tail, TailModel};
pub use weighted::mhs_star_weighted;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use rug::ops::Pow;
pub use rug::Float as BigFloat;
use rug::Float;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionConfig {
    pub target_digits: u32,
    pub guard_digits: u32,
    pub max_terms: u64,
    pub acceleration_order: u32,
}

impl PrecisionConfig {
    pub const DEFAULT_GUARD: u32 = 15;
    pub const DEFAULT_MAX_TERMS: u64 = 20_000;

    /// A configuration with default guard digits, term cap, and an
    /// acceleration order sized for the working precision.
    pub fn new(target_digits: u32) -> Self {
        let guard = Self::DEFAULT_GUARD;
        PrecisionConfig {
            target_digits,
            guard_digits: guard,
            max_terms: Self::DEFAULT_MAX_TERMS,
            acceleration_order: Self::order_for(target_digits + guard),
        }
    }

    /// CRVZ gains about `log10(3 + sqrt 8) ~ 0.77` digits per term.
    pub fn order_for(working_digits: u32) -> u32 {
        (1.31 * f64::from(working_digits)).ceil() as u32 + 8
    }

    pub fn with_target(self, target_digits: u32) -> Self {
        PrecisionConfig {
            target_digits,
            acceleration_order: Self::order_for(target_digits + self.guard_digits),
            ..self
        }
    }

    pub fn with_max_terms(self, max_terms: u64) -> Self {
        PrecisionConfig { max_terms, ..self }
    }

    pub fn with_acceleration_order(self, acceleration_order: u32) -> Self {
        PrecisionConfig {
            acceleration_order,
            ..self
        }
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Binary precision carrying at least the working digits.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 8
    }

    pub fn validate(&self) -> Result<()> {
        if self.target_digits == 0 || self.guard_digits == 0 {
            return Err(Error::domain("target and guard digits must be positive"));
        }
        if self.acceleration_order < 2 {
            return Err(Error::domain("acceleration order must be at least 2"));
        }
        if self.max_terms < 2 * u64::from(self.acceleration_order) {
            return Err(Error::domain(format!(
                "max_terms {} is below twice the acceleration order {}",
                self.max_terms, self.acceleration_order
            )));
        }
        Ok(())
    }

    /// `10^-target_digits` at working precision.
    pub fn tolerance(&self) -> Float {
        pow10(-(self.target_digits as i32), self.bits())
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits())
    }

    pub fn float<T>(&self, value: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig::new(30)
    }
}

/// A numeric result with a nonnegative error estimate and a short
/// description of how it was obtained.
#[derive(Clone, Debug)]
pub struct ValueWithError {
    pub value: Float,
    pub error_bound: Float,
    pub method: String,
}

impl ValueWithError {
    pub fn exact(value: Float, method: impl Into<String>) -> Self {
        let error_bound = Float::new(value.prec());
        ValueWithError {
            value,
            error_bound,
            method: method.into(),
        }
    }

    /// Fails with `ConvergenceFailure` when the estimate exceeds `10^-digits`.
    pub fn require(self, what: &str, digits: u32) -> Result<Self> {
        let limit = pow10(-(digits as i32), self.value.prec());
        if !self.error_bound.is_finite() || self.error_bound >= limit {
            return Err(Error::ConvergenceFailure {
                what: what.to_string(),
                estimate: sci(&self.error_bound, 3),
                digits,
            });
        }
        Ok(self)
    }
}

pub(crate) fn pow10(exp: i32, bits: u32) -> Float {
    let ten = Float::with_val(bits, 10);
    Float::with_val(bits, ten.pow(exp))
}

pub(crate) fn check_finite(value: &Float, what: impl FnOnce() -> String) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what()))
    }
}

/// Scientific notation with `digits` significant digits, e.g. `1.23e-40`.
pub fn sci(value: &Float, digits: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let (neg, mantissa, exp) = value.to_sign_string_exp(10, Some(digits.max(1)));
    let exp = exp.unwrap_or(0) - 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let (head, tail) = mantissa.split_at(1);
    out.push_str(head);
    let tail = tail.trim_end_matches('0');
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    out.push_str(&format!("e{exp}"));
    out
}

/// Decimal rendering with `digits` significant digits. Fixed notation is
/// used for moderate exponents and scientific notation otherwise.
pub fn format_sig(value: &Float, digits: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let digits = digits.max(1);
    let (neg, mantissa, exp) = value.to_sign_string_exp(10, Some(digits));
    let exp = exp.unwrap_or(0);
    if !(-5..=21).contains(&exp) {
        return sci(value, digits);
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp) as usize));
        out.push_str(&mantissa);
    } else {
        let e = exp as usize;
        if e >= mantissa.len() {
            out.push_str(&mantissa);
            out.push_str(&"0".repeat(e - mantissa.len()));
        } else {
            out.push_str(&mantissa[..e]);
            out.push('.');
            out.push_str(&mantissa[e..]);
        }
    }
    out
}
