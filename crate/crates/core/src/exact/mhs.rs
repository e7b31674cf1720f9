use rug::ops::Pow;
use rug::{Integer, Rational};

use super::Composition;
use crate::error::{Error, Result};

/// The multiple harmonic star sum
/// `sum_{n >= n_1 >= ... >= n_k >= 1} prod_j sgn(s_j)^{n_j} / n_j^{|s_j|}`.
///
/// Evaluated by a prefix recursion from the innermost index outwards, so the
/// cost is `O(n * depth)` rational operations. The empty composition gives 1.
pub fn mhs_star(n: u64, s: &Composition) -> Rational {
    let len = n as usize + 1;
    // inner[j] holds the value of the already-processed tail at upper limit j.
    let mut inner = vec![Rational::from(1); len];
    for &entry in s.entries().iter().rev() {
        let power = entry.unsigned_abs();
        let negative = entry < 0;
        let mut next = Vec::with_capacity(len);
        next.push(Rational::new());
        let mut acc = Rational::new();
        for (j, prev) in inner.iter().enumerate().skip(1) {
            let mut term = Rational::from((Integer::from(1), Integer::from(j).pow(power)));
            if negative && j % 2 == 1 {
                term = -term;
            }
            acc += term * prev;
            next.push(acc.clone());
        }
        inner = next;
    }
    inner.swap_remove(n as usize)
}

/// The partial sum of the multiple polylogarithm-star function at rational
/// weights: `sum_{1 <= k_m <= ... <= k_1 <= n} prod_j x_j^{k_j} / k_j^{s_j}`.
pub fn mhs_star_weighted_exact(n: u64, s: &[u32], x: &[Rational]) -> Result<Rational> {
    if s.len() != x.len() {
        return Err(Error::domain(format!(
            "exponent list has length {} but weight list has length {}",
            s.len(),
            x.len()
        )));
    }
    if s.contains(&0) {
        return Err(Error::domain("exponents must be positive"));
    }
    let len = n as usize + 1;
    let mut inner = vec![Rational::from(1); len];
    for (&power, weight) in s.iter().zip(x).rev() {
        let mut next = Vec::with_capacity(len);
        next.push(Rational::new());
        let mut acc = Rational::new();
        let mut wpow = Rational::from(1);
        for (j, prev) in inner.iter().enumerate().skip(1) {
            wpow *= weight;
            let term = Rational::from(&wpow / Integer::from(j).pow(power));
            acc += term * prev;
            next.push(acc.clone());
        }
        inner = next;
    }
    Ok(inner.swap_remove(n as usize))
}
