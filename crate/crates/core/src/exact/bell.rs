use rug::Rational;

use super::{factorial, harmonic, partial_fraction::binomial};
use crate::error::{Error, Result};

/// Complete exponential Bell polynomial `Y_k(x_1, ..., x_k)` via
/// `Y_{j+1} = sum_{i=0}^{j} C(j,i) Y_{j-i} x_{i+1}`.
fn complete_bell(k: usize, x: &[Rational]) -> Rational {
    let mut y = vec![Rational::from(1)];
    for j in 0..k {
        let mut next = Rational::new();
        for i in 0..=j {
            next += Rational::from(&y[j - i] * &x[i]) * binomial(j as u64, i as u64);
        }
        y.push(next);
    }
    y.swap_remove(k)
}

/// `Y_k(n)`: the complete Bell polynomial at `x_m = (m-1)! H_n^(m)`.
pub fn bell_y(k: u32, n: u64) -> Rational {
    let x: Vec<Rational> = (1..=k).map(|m| harmonic(n, m) * factorial(u64::from(m) - 1)).collect();
    complete_bell(k as usize, &x)
}

/// The expanded forms of `Y_1(n)` through `Y_4(n)`.
pub fn bell_y_closed(k: u32, n: u64) -> Result<Rational> {
    let h = harmonic(n, 1);
    let h2 = harmonic(n, 2);
    let h3 = harmonic(n, 3);
    let h4 = harmonic(n, 4);
    let sq = Rational::from(&h * &h);
    Ok(match k {
        1 => h,
        2 => sq + h2,
        3 => Rational::from(&sq * &h) + (3 * h.clone() * &h2) + (2 * h3),
        4 => Rational::from(&sq * &sq) + (8 * h * &h3) + (6 * sq * &h2) + (3 * h2.clone() * &h2) + (6 * h4),
        _ => {
            return Err(Error::domain(format!(
                "expanded Bell formula needs k in 1..=4, got {k}"
            )));
        }
    })
}
