use std::cmp::Ordering;
use std::collections::BTreeMap;

use rug::ops::Pow;
use rug::Float;

use super::{check_finite, PrecisionConfig, ValueWithError};
use crate::error::{Error, Result};

/// Asymptotic shape of the remainder of a slowly converging positive-order
/// series: `S - S_N ~ sum_{j < orders} sum_{i <= log_power} c_ij ln^i N / N^{decay - 1 + j}`.
///
/// Terms behaving like `ln^a n / n^q` give `log_power = a`, `decay = q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TailModel {
    pub log_power: u32,
    pub decay: u32,
    pub orders: u32,
}

impl TailModel {
    /// Chooses as many orders as fit in a 13-node fit, capped at 8.
    pub fn new(log_power: u32, decay: u32) -> Self {
        let orders = (12 / (log_power + 1)).clamp(1, 8);
        TailModel {
            log_power,
            decay,
            orders,
        }
    }

    fn unknowns(&self) -> usize {
        1 + (self.log_power as usize + 1) * self.orders as usize
    }
}

const RATIO: f64 = 0.93;

fn nodes(top: u64, count: usize) -> Vec<u64> {
    (0..count)
        .map(|t| (top as f64 * RATIO.powi(t as i32)).floor() as u64)
        .collect()
}

/// Sums `sum_{n>=1} a_n` from the first `cfg.max_terms` terms by fitting the
/// partial sums at geometrically spaced nodes to the remainder model.
///
/// Two fits are made, anchored at `N` and `N/2`; their difference is the
/// reported error. `term` is called with `n = 1, 2, ...` in order.
pub fn sum_with_tail<F>(mut term: F, model: TailModel, cfg: &PrecisionConfig) -> Result<ValueWithError>
where
    F: FnMut(u64) -> Result<Float>,
{
    if model.decay < 2 {
        return Err(Error::domain("tail model needs decay >= 2"));
    }
    let u = model.unknowns();
    let top = cfg.max_terms;
    let half = top / 2;
    let first = nodes(top, u);
    let second = nodes(half, u);
    if second[u - 1] < 16 || first.windows(2).any(|w| w[0] == w[1]) || second.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain(format!(
            "max_terms {top} is too small for a {u}-node tail fit"
        )));
    }
    let mut wanted: BTreeMap<u64, Float> = BTreeMap::new();
    for &n in first.iter().chain(&second) {
        wanted.insert(n, Float::new(1));
    }
    let bits = cfg.bits() + 64;
    let mut partial = Float::new(bits);
    for n in 1..=top {
        let a = term(n)?;
        check_finite(&a, || format!("series term {n}"))?;
        partial += a;
        if let Some(slot) = wanted.get_mut(&n) {
            *slot = partial.clone();
        }
    }
    let fit1 = fit(&first, top, &wanted, model, bits)?;
    let fit2 = fit(&second, half, &wanted, model, bits)?;
    let error_bound = Float::with_val(cfg.bits(), &fit1 - &fit2).abs();
    Ok(ValueWithError {
        value: Float::with_val(cfg.bits(), fit1),
        error_bound,
        method: format!("tail-fit(N={top}, nodes={u})"),
    })
}

fn fit(points: &[u64], top: u64, sums: &BTreeMap<u64, Float>, model: TailModel, bits: u32) -> Result<Float> {
    let u = points.len();
    let ln_top = Float::with_val(bits, top).ln();
    let mut rows: Vec<Vec<Float>> = Vec::with_capacity(u);
    for &n in points {
        let mut row = Vec::with_capacity(u + 1);
        row.push(Float::with_val(bits, 1));
        let lr = Float::with_val(bits, Float::with_val(bits, n).ln() / &ln_top);
        let ratio = Float::with_val(bits, top) / n;
        for j in 0..model.orders {
            let scale = Float::with_val(bits, (&ratio).pow((model.decay - 1 + j) as i32));
            let mut lp = Float::with_val(bits, 1);
            for _ in 0..=model.log_power {
                row.push(Float::with_val(bits, &lp * &scale));
                lp *= &lr;
            }
        }
        row.push(sums[&n].clone());
        rows.push(row);
    }
    let solution = solve(rows)?;
    Ok(solution.into_iter().next().unwrap())
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
fn solve(mut m: Vec<Vec<Float>>) -> Result<Vec<Float>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col + 1..n).fold(col, |best, r| {
            if m[r][col].cmp_abs(&m[best][col]) == Some(Ordering::Greater) {
                r
            } else {
                best
            }
        });
        if m[pivot][col].is_zero() {
            return Err(Error::domain("singular tail-fit system"));
        }
        m.swap(col, pivot);
        let (head, rest) = m.split_at_mut(col + 1);
        let prow = &head[col];
        for row in rest.iter_mut() {
            let factor = Float::with_val(prow[col].prec(), &row[col] / &prow[col]);
            for k in col..=n {
                let t = Float::with_val(prow[k].prec(), &factor * &prow[k]);
                row[k] -= t;
            }
        }
    }
    let mut x: Vec<Float> = vec![Float::new(m[0][0].prec()); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for k in i + 1..n {
            acc -= Float::with_val(acc.prec(), &m[i][k] * &x[k]);
        }
        x[i] = acc / &m[i][i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{zeta_int, HarmonicStream};
    use rug::ops::Pow;

    #[test]
    fn zeta2_from_partial_sums() {
        let cfg = PrecisionConfig::new(30);
        let bits = cfg.bits();
        let r = sum_with_tail(
            |n| Ok(Float::with_val(bits, Float::with_val(bits, n).pow(2u32)).recip()),
            TailModel::new(0, 2),
            &cfg,
        )
        .unwrap();
        let z2 = zeta_int(2, &cfg).unwrap();
        let diff = Float::with_val(bits, &r.value - &z2).abs();
        assert!(diff < 1e-28, "diff {diff}");
        assert!(r.error_bound < 1e-25);
    }

    #[test]
    fn euler_sum_with_logarithmic_tail() {
        // sum H_n / n^2 = 2 zeta(3); the remainder carries ln N / N.
        let cfg = PrecisionConfig::new(30);
        let bits = cfg.bits();
        let mut h = HarmonicStream::new(1, bits);
        let r = sum_with_tail(
            |n| {
                h.advance();
                Ok(Float::with_val(bits, h.get(1) / Float::with_val(bits, n).pow(2u32)))
            },
            TailModel::new(1, 2),
            &cfg,
        )
        .unwrap();
        let expected = zeta_int(3, &cfg).unwrap() * 2u32;
        let diff = Float::with_val(bits, &r.value - &expected).abs();
        assert!(diff < 1e-20, "diff {diff}");
        assert!(diff <= Float::with_val(bits, &r.error_bound * 100u32) + 1e-28f64);
    }

    #[test]
    fn rejects_bad_models() {
        let cfg = PrecisionConfig::new(30);
        assert!(sum_with_tail(|_| Ok(Float::new(64)), TailModel::new(0, 1), &cfg).is_err());
        let tiny = cfg.with_max_terms(40);
        assert!(sum_with_tail(|_| Ok(Float::new(64)), TailModel::new(0, 2), &tiny).is_err());
    }
}
