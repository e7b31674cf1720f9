//! Numeric evaluation of left-hand sides, and the reciprocal-binomial
//! reductions.
//!
//! Alternating series go through [`accelerate_alternating`], power series
//! with `|x| < 1` are summed directly with a geometric tail estimate, slow
//! positive series use [`sum_with_tail`], and integrals use [`quad_de`].

mod spec;
mod wbar;

pub use spec::{SeriesSpec, TermKind};
pub use wbar::{nonalt_binomial_check, wbar_direct, wbar_direct_summed, wbar_reduced, wbar_reduced_expr};

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::numerics::{
    self as num, accelerate_alternating, pow10, quad_de, sum_with_tail, HarmonicStream, PrecisionConfig, TailModel,
    ValueWithError,
};

/// Evaluates a left-hand side to `cfg.target_digits`, or fails with
/// `ConvergenceFailure` when the error estimate does not reach it.
pub fn eval_series(spec: &SeriesSpec, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    cfg.validate()?;
    let v = dispatch(spec, cfg)?;
    v.require(&spec.to_json(), cfg.target_digits)
}

/// Value and error estimate without the convergence requirement; the
/// caller judges the estimate.
pub fn eval_unchecked(spec: &SeriesSpec, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    cfg.validate()?;
    dispatch(spec, cfg)
}

fn dispatch(spec: &SeriesSpec, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    use SeriesSpec::*;
    match spec {
        AltShifted { term, k } => {
            term.validate()?;
            positive("k", *k)?;
            // (-1)^{n+k} = (-1)^{k+1} (-1)^{n-1}
            let k = u64::from(*k);
            let v = alt_term_series(term, cfg, |n| Rational::from(n + k).recip())?;
            Ok(signed(v, k % 2 == 0))
        }
        AltOverN { term, p } => {
            term.validate()?;
            positive("p", *p)?;
            let p = *p;
            alt_term_series(term, cfg, |n| Rational::from(n).recip().pow_u(p))
        }
        WbarAlt { orders, p, k } => wbar_direct(orders, *p, *k, cfg),
        WbarPlain { orders, p, k } => wbar::wbar_plain(orders, *p, *k, cfg),
        PlainOverN { term, p } => {
            term.validate()?;
            if *p < 2 {
                return Err(Error::domain("the unsigned series needs p >= 2"));
            }
            let model = TailModel::new(term.log_power(), *p);
            let mut h = HarmonicStream::new(term.max_order(), cfg.bits() + 32);
            let bits = cfg.bits() + 32;
            let p = *p;
            sum_with_tail(
                |n| {
                    h.advance();
                    let f = term_value(term, &h, bits);
                    Ok(f / Float::with_val(bits, n).pow_u(p))
                },
                model,
                cfg,
            )
        }
        PowerSeriesAt { term, x, p, shift } => power_series(term, x, *p, *shift, cfg),
        Nested {
            outer_power,
            outer_x,
            inner_power,
            inner_x,
        } => nested(*outer_power, outer_x, *inner_power, inner_x, cfg),
        Lemma21LHS { m, k, x } => stirling_series(*m, *k, x, cfg),
        Lemma22LHS { m, k, x } => {
            positive("m", *m)?;
            positive("k", *k)?;
            power_series(&TermKind::product(&[(*m, 1)]), x, 1, *k, cfg)
        }
        Lemma24LHS { m, x } => {
            positive("m", *m)?;
            open_unit(x)?;
            power_series(&TermKind::product(&[(1, 1), (*m, 1)]), x, 0, 0, cfg)
        }
        Thm25LHS { x } => {
            open_unit(x)?;
            power_series(&TermKind::product(&[(1, 1), (2, 1)]), x, 0, 0, cfg)
        }
        Reflection { p, m, x, y } => {
            let a = nested(*m, y, *p, x, cfg)?;
            let b = nested(*p, x, *m, y, cfg)?;
            Ok(combine(a, b, "reflection pair"))
        }
        IntLn1px { m, z } => {
            if *z < 0 || *z > 1 {
                return Err(Error::domain(format!("z = {z} must lie in [0, 1]")));
            }
            let m = *m;
            let b = Float::with_val(cfg.bits(), z);
            quad_de(
                |t| {
                    let l = Float::with_val(t.prec(), t.ln_1p_ref());
                    l.pow_u(m) / t
                },
                &cfg.zero(),
                &b,
                cfg,
            )
        }
        IntBeta { n, kpow } => {
            positive("n", *n)?;
            let (n, k) = (*n, *kpow);
            quad_de(
                |t| {
                    let one_minus = Float::with_val(t.prec(), 1 - t);
                    let tn = Float::with_val(t.prec(), t).pow_u(n - 1);
                    tn * one_minus.ln().pow_u(k)
                },
                &cfg.zero(),
                &cfg.float(1),
                cfg,
            )
        }
        IntLn1mxOver1px { m } => {
            let m = *m;
            quad_de(
                |t| {
                    let one_minus = Float::with_val(t.prec(), 1 - t);
                    let one_plus = Float::with_val(t.prec(), 1 + t);
                    one_minus.ln().pow_u(m) / one_plus
                },
                &cfg.zero(),
                &cfg.float(1),
                cfg,
            )
        }
        IntLn1mPartial { n, x } => {
            positive("n", *n)?;
            if *x < -1 || *x >= 1 {
                return Err(Error::domain(format!("x = {x} must lie in [-1, 1)")));
            }
            let n = *n;
            quad_de(
                |t| {
                    let one_minus = Float::with_val(t.prec(), 1 - t);
                    Float::with_val(t.prec(), t).pow_u(n - 1) * one_minus.ln()
                },
                &cfg.zero(),
                &Float::with_val(cfg.bits(), x),
                cfg,
            )
        }
        NestedEta { p } => nested_eta(*p, cfg),
        ShiftedOverSquare { k } => {
            positive("k", *k)?;
            let mut acc = ValueWithError::exact(cfg.zero(), "empty sum");
            let term = TermKind::product(&[(1, 1)]);
            for i in 1..u64::from(*k) {
                // (-1)^{n+i} = (-1)^{i+1} (-1)^{n-1}
                let v = alt_term_series(&term, cfg, |n| Rational::from((1, n * n * (n + i))))?;
                acc = combine(acc, signed(v, i % 2 == 0), "sum of shifted series");
            }
            Ok(acc)
        }
    }
}

/// Sum of the first `terms` summands of a series kind, without any
/// acceleration; useful as an independent cross-check.
pub fn partial_sum(spec: &SeriesSpec, terms: u64, cfg: &PrecisionConfig) -> Result<Float> {
    use SeriesSpec::*;
    let bits = cfg.bits() + 32;
    let (term, weight): (TermKind, Box<dyn Fn(u64) -> Float>) = match spec {
        AltShifted { term, k } => {
            let k = u64::from(*k);
            (
                term.clone(),
                Box::new(move |n| Float::with_val(bits, alt(n + k)) / (n + k)),
            )
        }
        AltOverN { term, p } => {
            let p = *p;
            (
                term.clone(),
                Box::new(move |n| Float::with_val(bits, alt(n + 1)) / Float::with_val(bits, n).pow_u(p)),
            )
        }
        WbarAlt { orders, p, k } | WbarPlain { orders, p, k } => {
            let (p, k) = (*p, u64::from(*k));
            let sign = matches!(spec, WbarAlt { .. });
            let factors: Vec<(u32, u32)> = orders.iter().map(|&m| (m, 1)).collect();
            (
                TermKind::product(&factors),
                Box::new(move |n| {
                    let s = if sign { alt(n + 1) } else { 1 };
                    let d = Float::with_val(bits, n).pow_u(p) * Float::with_val(bits, binomial(n + k, k));
                    Float::with_val(bits, s) / d
                }),
            )
        }
        PlainOverN { term, p } => {
            let p = *p;
            (
                term.clone(),
                Box::new(move |n| Float::with_val(bits, n).pow_u(p).recip()),
            )
        }
        PowerSeriesAt { term, x, p, shift } => {
            let (p, shift) = (*p, u64::from(*shift));
            let x = Float::with_val(bits, x);
            (
                term.clone(),
                Box::new(move |n| {
                    let e = n + shift;
                    Float::with_val(bits, x.pow_ref_u(e)) / Float::with_val(bits, e).pow_u(p)
                }),
            )
        }
        other => {
            return Err(Error::domain(format!(
                "partial sums are only defined for plain series kinds, not {other}"
            )))
        }
    };
    term.validate()?;
    let mut h = HarmonicStream::new(term.max_order(), bits);
    let mut acc = Float::new(bits);
    for n in 1..=terms {
        h.advance();
        acc += term_value(&term, &h, bits) * weight(n);
    }
    Ok(Float::with_val(cfg.bits(), acc))
}

fn alt(n: u64) -> i32 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::domain(format!("{name} must be a positive integer")));
    }
    Ok(())
}

fn open_unit(x: &Rational) -> Result<()> {
    if *x <= -1 || *x >= 1 {
        return Err(Error::domain(format!("x = {x} must lie in (-1, 1)")));
    }
    Ok(())
}

pub(crate) fn signed(mut v: ValueWithError, negate: bool) -> ValueWithError {
    if negate {
        v.value = -v.value;
    }
    v
}

pub(crate) fn combine(a: ValueWithError, b: ValueWithError, what: &str) -> ValueWithError {
    let bits = a.value.prec().max(b.value.prec());
    let method = if a.method == b.method || a.method == "empty sum" {
        b.method
    } else {
        format!("{}; {}", a.method, b.method)
    };
    ValueWithError {
        value: Float::with_val(bits, &a.value + &b.value),
        error_bound: Float::with_val(bits, &a.error_bound + &b.error_bound),
        method: if method.is_empty() { what.to_string() } else { method },
    }
}

pub(crate) trait PowU {
    fn pow_u(self, e: u32) -> Self;
}

impl PowU for Float {
    fn pow_u(self, e: u32) -> Float {
        use rug::ops::Pow;
        self.pow(e)
    }
}

impl PowU for Rational {
    fn pow_u(self, e: u32) -> Rational {
        use rug::ops::Pow;
        self.pow(e as i32)
    }
}

trait PowRefU {
    fn pow_ref_u(&self, e: u64) -> Float;
}

impl PowRefU for Float {
    fn pow_ref_u(&self, e: u64) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(rug::Integer::from(e)))
    }
}

/// Numeric value of a numerator at the stream's current index.
pub(crate) fn term_value(term: &TermKind, h: &HarmonicStream, bits: u32) -> Float {
    let mut v = Float::with_val(bits, 1);
    for &(m, e) in &term.factors {
        v *= Float::with_val(bits, h.get(m)).pow_u(e);
    }
    if let Some(k) = term.bell_k {
        // x_m = (-1)^{m-1} (m-1)! H^(m) when signed, (m-1)! H^(m) otherwise.
        let mut fact = Float::with_val(bits, 1);
        let x: Vec<Float> = (1..=k)
            .map(|m| {
                if m > 1 {
                    fact *= m - 1;
                }
                let mut xm = Float::with_val(bits, h.get(m) * &fact);
                if term.bell_signed && m % 2 == 0 {
                    xm = -xm;
                }
                xm
            })
            .collect();
        let mut y = vec![Float::with_val(bits, 1)];
        for j in 0..k as usize {
            let mut next = Float::new(bits);
            for i in 0..=j {
                let c = binomial(j as u64, i as u64);
                next += Float::with_val(bits, &y[j - i] * &x[i]) * c;
            }
            y.push(next);
        }
        v *= &y[k as usize];
    }
    v
}

/// `sum_{n>=1} (-1)^{n-1} f(n) w(n)` with exact rational weights.
fn alt_term_series<W>(term: &TermKind, cfg: &PrecisionConfig, weight: W) -> Result<ValueWithError>
where
    W: Fn(u64) -> Rational,
{
    let bits = cfg.bits() + 32;
    let mut h = HarmonicStream::new(term.max_order(), bits);
    accelerate_alternating(
        |n| {
            h.advance();
            Ok(term_value(term, &h, bits) * weight(n))
        },
        cfg,
    )
}

/// Direct summation of `sum_{n>=1} a_n` for geometrically decaying terms
/// `|a_n| ~ poly(n) r^n`, stopping once `|a_n| / (1 - r)` (doubled) is below
/// the tolerance.
fn geometric_sum<F>(mut term: F, r: f64, cfg: &PrecisionConfig, what: &str) -> Result<ValueWithError>
where
    F: FnMut(u64) -> Result<Float>,
{
    let bits = cfg.bits() + 32;
    let factor = 2.0 / (1.0 - r);
    let eps = pow10(-(cfg.working_digits() as i32), bits);
    let mut acc = Float::new(bits);
    let mut n = 0u64;
    loop {
        n += 1;
        if n > cfg.max_terms {
            return Err(Error::ConvergenceFailure {
                what: what.to_string(),
                estimate: "unbounded".into(),
                digits: cfg.target_digits,
            });
        }
        let a = term(n)?;
        let bound = Float::with_val(bits, a.abs_ref()) * factor;
        acc += a;
        // Skip the initial growth of the polynomial factor.
        if n > 8 && bound < eps {
            return Ok(ValueWithError {
                value: Float::with_val(cfg.bits(), acc),
                error_bound: Float::with_val(cfg.bits(), bound),
                method: format!("direct({n} terms)"),
            });
        }
    }
}

/// `sum_{n>=1} f(n) x^{n+shift} / (n+shift)^p`.
fn power_series(term: &TermKind, x: &Rational, p: u32, shift: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    term.validate()?;
    let bits = cfg.bits() + 32;
    let shift = u64::from(shift);
    if *x == -1 {
        if p == 0 && shift == 0 {
            return Err(Error::domain("the series at x = -1 diverges without a denominator"));
        }
        // x^{n+shift} = (-1)^{shift+1} (-1)^{n-1}
        let v = alt_term_series(term, cfg, |n| Rational::from(n + shift).recip().pow_u(p))?;
        return Ok(signed(v, shift % 2 == 0));
    }
    if *x <= -1 || *x >= 1 {
        return Err(Error::domain(format!("x = {x} must lie in [-1, 1)")));
    }
    let xf = Float::with_val(bits, x);
    let mut xpow = Float::with_val(bits, xf.pow_ref_u(shift));
    let mut h = HarmonicStream::new(term.max_order(), bits);
    geometric_sum(
        |n| {
            h.advance();
            xpow *= &xf;
            let d = Float::with_val(bits, n + shift).pow_u(p);
            Ok(term_value(term, &h, bits) * &xpow / d)
        },
        x.to_f64().abs(),
        cfg,
        "power series",
    )
}

/// `sum_{n>=1} y^n / n^m * sum_{j<=n} x^j / j^p`.
fn nested(m: u32, y: &Rational, p: u32, x: &Rational, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    positive("inner power", p)?;
    positive("outer power", m)?;
    let bits = cfg.bits() + 32;
    let (ay, ax) = (y.clone().abs(), x.clone().abs());
    if ay > 1 || ax > 1 || (*y == 1 && m < 2) || (*x == 1 && p < 2 && *y != -1) {
        return Err(Error::domain(format!("nested sum diverges at x = {x}, y = {y}")));
    }
    let xf = Float::with_val(bits, x);
    let yf = Float::with_val(bits, y);
    if ay < 1 {
        // Direct in n; the inner sum is a running total.
        let mut inner = Float::new(bits);
        let (mut xp, mut yp) = (Float::with_val(bits, 1), Float::with_val(bits, 1));
        return geometric_sum(
            |n| {
                xp *= &xf;
                yp *= &yf;
                inner += Float::with_val(bits, &xp / Float::with_val(bits, n).pow_u(p));
                Ok(Float::with_val(bits, &yp * &inner) / Float::with_val(bits, n).pow_u(m))
            },
            y.to_f64().abs(),
            cfg,
            "nested sum",
        );
    }
    if ax < 1 {
        // sum_j x^j/j^p (Li_m(y) - sum_{n<j} y^n/n^m)
        let li = num::polylog(m, &yf, &cfg.with_target(cfg.target_digits + 5))?;
        let mut head = Float::new(bits);
        let mut yp = Float::with_val(bits, 1);
        let mut xp = Float::with_val(bits, 1);
        return geometric_sum(
            |j| {
                if j > 1 {
                    yp *= &yf;
                    head += Float::with_val(bits, &yp / Float::with_val(bits, j - 1).pow_u(m));
                }
                xp *= &xf;
                let tail = Float::with_val(bits, &li - &head);
                Ok(Float::with_val(bits, &xp * &tail) / Float::with_val(bits, j).pow_u(p))
            },
            x.to_f64().abs(),
            cfg,
            "nested sum",
        );
    }
    if *x == 1 {
        // sum y^n H_n^(p) / n^m with y = +-1.
        let term = TermKind::product(&[(p, 1)]);
        if *y == 1 {
            return dispatch(&SeriesSpec::PlainOverN { term, p: m }, cfg);
        }
        let v = alt_term_series(&term, cfg, |n| Rational::from(n).recip().pow_u(m))?;
        return Ok(signed(v, true));
    }
    if *y == 1 {
        // x = -1: sum_j (-1)^j/j^p (zeta(m) - H_{j-1}^(m)), alternating in j.
        let z = num::zeta_int(m, &cfg.with_target(cfg.target_digits + 5))?;
        let v = tail_weighted_alternating(&z, m, p, cfg)?;
        return Ok(signed(v, true));
    }
    Err(Error::domain("nested sums with x = y = -1 are not supported"))
}

/// `sum_{j>=1} (-1)^{j-1} (zeta(m) - H_{j-1}^(m)) / j^p`.
fn tail_weighted_alternating(zeta_m: &Float, m: u32, p: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let bits = cfg.bits() + 32;
    let mut head = Float::new(bits);
    accelerate_alternating(
        |j| {
            if j > 1 {
                head += Float::with_val(bits, j - 1).pow_u(m).recip();
            }
            let tail = Float::with_val(bits, zeta_m - &head);
            Ok(tail / Float::with_val(bits, j).pow_u(p))
        },
        cfg,
    )
}

/// `sum_{n>=1} 1/n^p sum_{j<=n} (-1)^{j-1}/j`, reordered to
/// `sum_j (-1)^{j-1}/j (zeta(p) - H_{j-1}^(p))`.
fn nested_eta(p: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if p < 2 {
        return Err(Error::domain("the nested eta sum needs p >= 2"));
    }
    let z = num::zeta_int(p, &cfg.with_target(cfg.target_digits + 5))?;
    tail_weighted_alternating(&z, p, 1, cfg)
}

/// `(-1)^m m! sum_{n>=m} s(n+1,m+1)/((n+k) n!) x^{n+k} + ln^{m+1}(1-x)/(m+1)`.
///
/// `t_j(n) = s(n+1,j)/n!` obeys `t_j(n) = t_j(n-1) + t_{j-1}(n-1)/n` with
/// `t_1 = 1`, so only `m + 1` running values are kept.
fn stirling_series(m: u32, k: u32, x: &Rational, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    positive("m", m)?;
    positive("k", k)?;
    if *x < -1 || *x >= 1 {
        return Err(Error::domain(format!("x = {x} must lie in [-1, 1)")));
    }
    let bits = cfg.bits() + 32;
    let (mu, k) = (m as usize, u64::from(k));
    // t[j] holds t_{j+1}(n); at n = 0 only t_1 is nonzero.
    let mut t: Vec<Float> = (0..=mu).map(|j| Float::with_val(bits, u32::from(j == 0))).collect();
    let step = |t: &mut Vec<Float>, n: u64| {
        for j in (1..t.len()).rev() {
            let carry = Float::with_val(bits, &t[j - 1] / n);
            t[j] += carry;
        }
    };
    let xf = Float::with_val(bits, x);
    let series = if *x == -1 {
        for n in 1..u64::from(m) {
            step(&mut t, n);
        }
        // n = m - 1 + i: (-1)^{n+k} = (-1)^{m+k} (-1)^{i-1}
        let v = accelerate_alternating(
            |i| {
                let n = u64::from(m) - 1 + i;
                step(&mut t, n);
                Ok(Float::with_val(bits, &t[mu] / (n + k)))
            },
            cfg,
        )?;
        signed(v, (u64::from(m) + k) % 2 == 1)
    } else {
        let mut xp = Float::with_val(bits, xf.pow_ref_u(k));
        geometric_sum(
            |n| {
                step(&mut t, n);
                xp *= &xf;
                Ok(if n < u64::from(m) {
                    Float::new(bits)
                } else {
                    Float::with_val(bits, &t[mu] * &xp) / (n + k)
                })
            },
            x.to_f64().abs(),
            cfg,
            "stirling series",
        )?
    };
    let mut scale = Float::with_val(bits, crate::exact::factorial(u64::from(m)));
    if m % 2 == 1 {
        scale = -scale;
    }
    let l1 = Float::with_val(bits, 1 - &xf).ln().pow_u(m + 1) / (m + 1);
    Ok(ValueWithError {
        value: Float::with_val(cfg.bits(), &series.value * &scale + l1),
        error_bound: Float::with_val(cfg.bits(), &series.error_bound * scale.abs()),
        method: series.method,
    })
}

#[cfg(test)]
mod tests;
