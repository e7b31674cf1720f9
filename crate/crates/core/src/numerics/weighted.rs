use rug::ops::Pow;
use rug::Float;

use super::PrecisionConfig;
use crate::error::{Error, Result};

/// Floating partial sum of the multiple polylogarithm-star function:
/// `sum_{1 <= k_m <= ... <= k_1 <= n} prod_j x_j^{k_j} / k_j^{s_j}`.
pub fn mhs_star_weighted(n: u64, s: &[u32], x: &[Float], cfg: &PrecisionConfig) -> Result<Float> {
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
    let bits = cfg.bits() + 16;
    let len = n as usize + 1;
    let mut inner = vec![Float::with_val(bits, 1); len];
    for (&power, weight) in s.iter().zip(x).rev() {
        let mut next = Vec::with_capacity(len);
        next.push(Float::new(bits));
        let mut acc = Float::new(bits);
        let mut wpow = Float::with_val(bits, 1);
        for (j, below) in inner.iter().enumerate().skip(1) {
            wpow *= weight;
            let term = Float::with_val(bits, &wpow / Float::with_val(bits, j).pow(power));
            acc += term * below;
            next.push(acc.clone());
        }
        inner = next;
    }
    Ok(Float::with_val(cfg.bits(), &inner[n as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{mhs_star_weighted_exact, Rational};

    #[test]
    fn matches_exact_evaluation() {
        let cfg = PrecisionConfig::new(40);
        let xs = [Rational::from((-1, 2)), Rational::from((9, 10)), Rational::from((1, 3))];
        let xf: Vec<Float> = xs.iter().map(|r| Float::with_val(cfg.bits() + 32, r)).collect();
        for s in [vec![1u32], vec![2, 1], vec![1, 3, 2]] {
            let d = s.len();
            for n in [0u64, 1, 7, 25] {
                let exact = mhs_star_weighted_exact(n, &s, &xs[..d]).unwrap();
                let approx = mhs_star_weighted(n, &s, &xf[..d], &cfg).unwrap();
                let diff = Float::with_val(cfg.bits(), &approx - &exact).abs();
                assert!(diff < 1e-40, "s={s:?}, n={n}");
            }
        }
        assert!(mhs_star_weighted(3, &[1, 2], &xf[..1], &cfg).is_err());
    }
}
