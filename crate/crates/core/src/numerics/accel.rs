use rug::ops::Pow;
use rug::Float;

use super::{check_finite, sci, PrecisionConfig, ValueWithError};
use crate::error::{Error, Result};

/// Sums `sum_{n>=1} (-1)^{n-1} a_n` with the Cohen–Rodriguez Villegas–Zagier
/// transform of order `cfg.acceleration_order`.
///
/// `term` is called with `n = 1, 2, ...` in increasing order and must return
/// `a_n`. The transform is exact to roughly `(3 + sqrt 8)^-d` relative
/// accuracy for totally monotone `a_n`; the reported error is the difference
/// between orders `d` and `d - 1`.
pub fn accelerate_alternating<F>(mut term: F, cfg: &PrecisionConfig) -> Result<ValueWithError>
where
    F: FnMut(u64) -> Result<Float>,
{
    let d = cfg.acceleration_order as usize;
    if d < 2 {
        return Err(Error::domain("acceleration order must be at least 2"));
    }
    let bits = cfg.bits() + 32;
    let mut terms = Vec::with_capacity(d);
    for n in 1..=d as u64 {
        let a = term(n)?;
        check_finite(&a, || format!("series term {n}"))?;
        terms.push(Float::with_val(bits, a));
    }
    let full = crvz(&terms, bits);
    let lower = crvz(&terms[..d - 1], bits);
    let error_bound = Float::with_val(cfg.bits(), &full - &lower).abs();
    Ok(ValueWithError {
        value: Float::with_val(cfg.bits(), full),
        error_bound,
        method: format!("crvz(d={d})"),
    })
}

fn crvz(a: &[Float], bits: u32) -> Float {
    let d = a.len() as i64;
    let sqrt8 = Float::with_val(bits, 8).sqrt();
    let e = Float::with_val(bits, sqrt8 + 3u32).pow(d as i32);
    let dd = Float::with_val(bits, &e + Float::with_val(bits, e.recip_ref())) / 2u32;
    let mut b = Float::with_val(bits, -1);
    let mut c = Float::with_val(bits, -&dd);
    let mut s = Float::new(bits);
    for (k, ak) in a.iter().enumerate() {
        let k = k as i64;
        c = Float::with_val(bits, &b - &c);
        s += Float::with_val(bits, &c * ak);
        b *= (k + d) * (k - d) * 2;
        b /= (2 * k + 1) * (k + 1);
    }
    s / dd
}

/// Sums the same alternating series with an iterated Euler transform applied
/// after a short direct head. Slower than [`accelerate_alternating`]; used as
/// an independent cross-check.
pub fn euler_alternating<F>(mut term: F, cfg: &PrecisionConfig) -> Result<ValueWithError>
where
    F: FnMut(u64) -> Result<Float>,
{
    const HEAD: u64 = 10;
    let depth = cfg.bits() as usize + 16;
    let bits = cfg.bits() + depth as u32 + 32;
    let mut head = Float::new(bits);
    for n in 1..=HEAD {
        let a = term(n)?;
        check_finite(&a, || format!("series term {n}"))?;
        if n % 2 == 1 {
            head += a;
        } else {
            head -= a;
        }
    }
    // Differences of b_j = a_{HEAD+1+j}: after reading b_j,
    // diag[i] = (Delta^i b)_{j-i}, so the last slot is (Delta^j b)_0.
    let mut diag: Vec<Float> = Vec::with_capacity(depth);
    let mut tail = Float::new(bits);
    let mut scale = Float::with_val(bits, 0.5);
    let mut last = Float::new(bits);
    let mut prev = Float::new(bits);
    for j in 0..depth {
        let b = term(HEAD + 1 + j as u64)?;
        check_finite(&b, || format!("series term {}", HEAD + 1 + j as u64))?;
        let mut carry = Float::with_val(bits, b);
        for slot in diag.iter_mut() {
            let next = Float::with_val(bits, &carry - &*slot);
            *slot = carry;
            carry = next;
        }
        diag.push(carry);
        let delta = diag.last().unwrap();
        let mut inc = Float::with_val(bits, delta * &scale);
        if j % 2 == 1 {
            inc = -inc;
        }
        tail += &inc;
        prev = std::mem::replace(&mut last, inc.abs());
        scale /= 2u32;
    }
    let sign_flip = HEAD % 2 == 1;
    let value = if sign_flip { head - tail } else { head + tail };
    let error_bound = Float::with_val(cfg.bits(), &last + &prev);
    if !error_bound.is_finite() {
        return Err(Error::NonFinite(format!(
            "Euler transform error {}",
            sci(&error_bound, 3)
        )));
    }
    Ok(ValueWithError {
        value: Float::with_val(cfg.bits(), value),
        error_bound,
        method: format!("euler(head={HEAD}, depth={depth})"),
    })
}
