use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::{Float, Rational};

use super::{accelerate_alternating, PrecisionConfig};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum ConstKey {
    Eta(u32),
    LiHalf(u32),
}

type Cache = Mutex<HashMap<(ConstKey, PrecisionConfig), Float>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(key: ConstKey, cfg: &PrecisionConfig, compute: impl FnOnce() -> Result<Float>) -> Result<Float> {
    if let Some(v) = cache().lock().unwrap().get(&(key, *cfg)) {
        return Ok(v.clone());
    }
    // Computed outside the lock; a racing duplicate computation is harmless.
    let v = compute()?;
    cache().lock().unwrap().insert((key, *cfg), v.clone());
    Ok(v)
}

/// Dirichlet eta `eta(s) = sum (-1)^{n-1} / n^s` for `s >= 1`.
pub fn eta_int(s: u32, cfg: &PrecisionConfig) -> Result<Float> {
    if s == 0 {
        return Err(Error::domain("eta(s) needs s >= 1"));
    }
    cached(ConstKey::Eta(s), cfg, || {
        let bits = cfg.bits() + 16;
        let r = accelerate_alternating(
            |n| Ok(Float::with_val(bits, Float::with_val(bits, n).pow(s)).recip()),
            cfg,
        )?;
        Ok(r.value)
    })
}

/// Riemann zeta at an integer `s >= 2`, as `eta(s) / (1 - 2^{1-s})`.
pub fn zeta_int(s: u32, cfg: &PrecisionConfig) -> Result<Float> {
    if s < 2 {
        return Err(Error::domain(format!("zeta(s) needs s >= 2, got {s}")));
    }
    let eta = eta_int(s, cfg)?;
    let bits = cfg.bits();
    let factor = Float::with_val(bits, 1) - Float::with_val(bits, 2f64).pow(1 - s as i32);
    Ok(eta / factor)
}

pub fn ln2(cfg: &PrecisionConfig) -> Result<Float> {
    eta_int(1, cfg)
}

/// `Li_p(1/2) = sum 1 / (2^n n^p)`.
pub fn li_half(p: u32, cfg: &PrecisionConfig) -> Result<Float> {
    if p == 0 {
        return Err(Error::domain("Li_p(1/2) needs p >= 1"));
    }
    cached(ConstKey::LiHalf(p), cfg, || {
        let half = Float::with_val(cfg.bits(), 0.5);
        polylog(p, &half, cfg)
    })
}

/// Polylogarithm `Li_p(x)` for `p >= 1` and real `|x| <= 1`, excluding the
/// pole at `p = 1, x = 1`.
pub fn polylog(p: u32, x: &Float, cfg: &PrecisionConfig) -> Result<Float> {
    let bits = cfg.bits();
    if p == 0 {
        return Err(Error::domain("polylog order must be >= 1"));
    }
    if !x.is_finite() {
        return Err(Error::NonFinite("polylog argument".into()));
    }
    let ax = Float::with_val(bits, x.abs_ref());
    if ax > 1 {
        return Err(Error::domain(format!("polylog argument {x} outside [-1, 1]")));
    }
    if x.is_zero() {
        return Ok(Float::new(bits));
    }
    if *x == 1 {
        if p == 1 {
            return Err(Error::domain("Li_1(1) diverges"));
        }
        return zeta_int(p, cfg);
    }
    if *x == -1 {
        return Ok(-eta_int(p, cfg)?);
    }
    if p == 1 {
        let one_minus = Float::with_val(bits, 1) - x;
        return Ok(-one_minus.ln());
    }
    // Direct sum; the remainder after N terms is at most |x|^{N+1} / (1-|x|).
    let eps = cfg.tolerance() * super::pow10(-(cfg.guard_digits as i32), bits);
    let gap = Float::with_val(bits, 1) - &ax;
    let needed = {
        let l = f64::from(cfg.working_digits()) * std::f64::consts::LN_10 - gap.to_f64().ln();
        (l / -ax.to_f64().ln()).ceil() as u64 + 2
    };
    if needed > cfg.max_terms && *x < 0 {
        let xa = ax.clone();
        return Ok(-accelerate_alternating(
            |n| {
                let xn = Float::with_val(bits + 16, (&xa).pow(n as u32));
                Ok(xn / Float::with_val(bits + 16, n).pow(p))
            },
            cfg,
        )?
        .value);
    }
    if needed > cfg.max_terms {
        return Err(Error::ConvergenceFailure {
            what: format!("Li_{p}({x})"),
            estimate: "direct sum too slow".into(),
            digits: cfg.target_digits,
        });
    }
    let wbits = bits + 16;
    let mut sum = Float::new(wbits);
    let mut xn = Float::with_val(wbits, 1);
    for n in 1..=needed {
        xn *= x;
        sum += Float::with_val(wbits, &xn / Float::with_val(wbits, n).pow(p));
        if Float::with_val(bits, xn.abs_ref()) < eps {
            break;
        }
    }
    Ok(Float::with_val(bits, sum))
}

pub fn polylog_rational(p: u32, x: &Rational, cfg: &PrecisionConfig) -> Result<Float> {
    polylog(p, &Float::with_val(cfg.bits(), x), cfg)
}
