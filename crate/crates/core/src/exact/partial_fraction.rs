use rug::{Integer, Rational};

pub fn binomial(n: u64, k: u64) -> Integer {
    Integer::from(n).binomial(k as u32)
}

/// Coefficients `A_r = (-1)^{r+1} r C(k,r)` with
/// `1/C(n+k,k) = sum_{r=1}^k A_r / (n+r)` for every `n >= 0`.
pub fn binom_recip_coeffs(k: u32) -> Vec<(u32, Rational)> {
    let k64 = u64::from(k);
    (1..=k)
        .map(|r| {
            let mut a = binomial(k64, u64::from(r)) * r;
            if r % 2 == 0 {
                a = -a;
            }
            (r, Rational::from(a))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(n: u64, k: u32) -> Rational {
        binom_recip_coeffs(k)
            .into_iter()
            .map(|(r, a)| a / Integer::from(n + u64::from(r)))
            .sum()
    }

    #[test]
    fn small_k() {
        assert_eq!(binom_recip_coeffs(1), vec![(1, Rational::from(1))]);
        assert_eq!(
            binom_recip_coeffs(2),
            vec![(1, Rational::from(2)), (2, Rational::from(-2))]
        );
        assert_eq!(
            binom_recip_coeffs(3),
            vec![(1, Rational::from(3)), (2, Rational::from(-6)), (3, Rational::from(3))]
        );
        assert_eq!(expand(1, 2), Rational::from((1, 3)));
        assert_eq!(expand(1, 3), Rational::from((1, 4)));
    }

    #[test]
    fn identity_holds_on_a_grid() {
        for k in 1..=10u32 {
            for n in 0..=25u64 {
                let expected = Rational::from((1, binomial(n + u64::from(k), u64::from(k))));
                assert_eq!(expand(n, k), expected, "n={n}, k={k}");
            }
        }
    }
}
