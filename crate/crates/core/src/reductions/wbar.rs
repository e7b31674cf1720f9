//! Sums with reciprocal binomial coefficients,
//! `W_k(m_1..m_r; p) = sum_n prod H_n^(m_i) / (n^p C(n+k,k))`, signed and
//! unsigned, and their reduction to shifted sums.

use rug::{Float, Integer, Rational};

use super::{term_value, SeriesSpec, TermKind};
use crate::closedform::{eval_expr, rhs_known, rhs_nonalt_binomial, rhs_thm11, ConstExpr, Family};
use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::numerics::{
    accelerate_alternating, sum_with_tail, HarmonicStream, PrecisionConfig, TailModel, ValueWithError,
};

fn check(orders: &[u32], p: u32, k: u32) -> Result<TermKind> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::domain("orders must be a nonempty list of positive integers"));
    }
    if p > 1 {
        return Err(Error::domain(format!("p must be 0 or 1, got {p}")));
    }
    if k == 0 {
        return Err(Error::domain("k must be a positive integer"));
    }
    let factors: Vec<(u32, u32)> = orders.iter().map(|&m| (m, 1)).collect();
    Ok(TermKind::product(&factors))
}

/// `1 / (n^p C(n+k,k))` as an exact rational.
fn weight(n: u64, p: u32, k: u64) -> Rational {
    let d = Integer::from(n).pow_u(p) * binomial(n + k, k);
    Rational::from((Integer::from(1), d))
}

trait IntPow {
    fn pow_u(self, e: u32) -> Integer;
}

impl IntPow for Integer {
    fn pow_u(self, e: u32) -> Integer {
        use rug::ops::Pow;
        self.pow(e)
    }
}

/// `sum_{n>=1} (-1)^{n+1} prod H_n^(m_i) / (n^p C(n+k,k))` by series
/// acceleration.
pub fn wbar_direct(orders: &[u32], p: u32, k: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let term = check(orders, p, k)?;
    let bits = cfg.bits() + 32;
    let k = u64::from(k);
    let mut h = HarmonicStream::new(term.max_order(), bits);
    accelerate_alternating(
        |n| {
            h.advance();
            Ok(term_value(&term, &h, bits) * weight(n, p, k))
        },
        cfg,
    )
}

/// The same alternating sum by plain partial summation over `terms` terms.
///
/// The error bound is the first omitted term, valid because the summands
/// decrease monotonically in absolute value.
pub fn wbar_direct_summed(orders: &[u32], p: u32, k: u32, terms: u64, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let term = check(orders, p, k)?;
    let bits = cfg.bits() + 32;
    let k = u64::from(k);
    let mut h = HarmonicStream::new(term.max_order(), bits);
    let mut acc = Float::new(bits);
    for n in 1..=terms {
        h.advance();
        let a = term_value(&term, &h, bits) * weight(n, p, k);
        if n % 2 == 1 {
            acc += a;
        } else {
            acc -= a;
        }
    }
    h.advance();
    let next = term_value(&term, &h, bits) * weight(terms + 1, p, k);
    Ok(ValueWithError {
        value: Float::with_val(cfg.bits(), acc),
        error_bound: Float::with_val(cfg.bits(), next),
        method: format!("direct({terms} terms)"),
    })
}

/// Unsigned variant; needs `p + k >= 2` and converges only algebraically.
pub(crate) fn wbar_plain(orders: &[u32], p: u32, k: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let term = check(orders, p, k)?;
    if p + k < 2 {
        return Err(Error::domain("the unsigned sum diverges for p + k < 2"));
    }
    let bits = cfg.bits() + 32;
    let model = TailModel::new(term.log_power(), p + k);
    let k = u64::from(k);
    let mut h = HarmonicStream::new(term.max_order(), bits);
    sum_with_tail(
        |n| {
            h.advance();
            Ok(term_value(&term, &h, bits) * weight(n, p, k))
        },
        model,
        cfg,
    )
}

/// Reduction of the signed sum with numerator `H_n H_n^(2)` (quadratic) or
/// `H_n^3` (cubic) to shifted sums.
///
/// With `T_r` the closed form of `sum f(n)/(n+r) (-1)^{n+r}`, the shifted sum
/// with sign `(-1)^{n+1}` is `S_r = (-1)^{r+1} T_r`. Partial fractions give
/// `1/C(n+k,k) = sum_r (-1)^{r+1} r C(k,r)/(n+r)` and
/// `1/(n C(n+k,k)) = sum_r (-1)^{r+1} C(k,r) (1/n - 1/(n+r))`, so
///
/// - `p = 0`: `W = sum_r (-1)^{r+1} r C(k,r) S_r = sum_r r C(k,r) T_r`,
/// - `p = 1`: `W = sum_r (-1)^{r+1} C(k,r) (A - S_r)` with `A = sum f(n)/n (-1)^{n+1}`.
pub fn wbar_reduced_expr(family: Family, p: u32, k: u32) -> Result<ConstExpr> {
    if k == 0 {
        return Err(Error::domain("k must be a positive integer"));
    }
    let over_n = match (p, family) {
        (0, _) => None,
        (1, Family::Quadratic) => Some(rhs_known("cor28_hh2", None)?),
        (1, Family::Cubic) => Some(rhs_known("cor28_h3", None)?),
        _ => return Err(Error::domain(format!("p must be 0 or 1, got {p}"))),
    };
    let mut out = ConstExpr::zero();
    for r in 1..=k {
        let t = rhs_thm11(family, r)?;
        let sign = if r % 2 == 1 { 1 } else { -1 };
        let s_r = ConstExpr::rational(Rational::from(sign)) * t;
        let c = Rational::from(binomial(u64::from(k), u64::from(r)));
        out = out
            + match &over_n {
                None => ConstExpr::rational(c * (sign * r as i64)) * s_r,
                Some(a) => ConstExpr::rational(c * sign) * (a.clone() - s_r),
            };
    }
    Ok(out)
}

/// Numeric value of [`wbar_reduced_expr`].
pub fn wbar_reduced(family: Family, p: u32, k: u32, cfg: &PrecisionConfig) -> Result<Float> {
    eval_expr(&wbar_reduced_expr(family, p, k)?, cfg)
}

/// Both sides of `sum H_n H_n^(2) / (n C(n+k,k))` = its closed form: the
/// tail-fitted series and the evaluated finite combination.
pub fn nonalt_binomial_check(k: u32, cfg: &PrecisionConfig) -> Result<(ValueWithError, Float)> {
    let rhs = eval_expr(&rhs_nonalt_binomial(k)?, cfg)?;
    let lhs = super::dispatch(
        &SeriesSpec::WbarPlain {
            orders: vec![1, 2],
            p: 1,
            k,
        },
        cfg,
    )?;
    Ok((lhs, rhs))
}
