use std::sync::{OnceLock, RwLock};

use rug::{Integer, Rational};

use super::harmonic;
use crate::error::{Error, Result};

/// Row `n` holds `s(n, 0..=n)`.
fn table() -> &'static RwLock<Vec<Vec<Integer>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![Integer::from(1)]]))
}

/// Unsigned Stirling number of the first kind, from
/// `s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)` with `s(0,0) = 1`.
pub fn stirling1(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::new();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = table().read().unwrap();
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = table().write().unwrap();
    while rows.len() <= n {
        let i = rows.len();
        let prev = &rows[i - 1];
        let mut row = Vec::with_capacity(i + 1);
        row.push(Integer::new());
        for j in 1..=i {
            let mut v = prev[j - 1].clone();
            if j < i {
                v += Integer::from(&prev[j] * (i as u64 - 1));
            }
            row.push(v);
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

pub fn factorial(n: u64) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// `s(n, k)` for `k` in `1..=5` from its expression in harmonic numbers of
/// index `n - 1`.
pub fn stirling1_closed(n: u64, k: u32) -> Result<Rational> {
    if !(1..=5).contains(&k) {
        return Err(Error::domain(format!(
            "closed Stirling formula needs k in 1..=5, got {k}"
        )));
    }
    if n == 0 {
        return Err(Error::domain("closed Stirling formula needs n >= 1"));
    }
    let m = n - 1;
    let h1 = harmonic(m, 1);
    let h2 = harmonic(m, 2);
    let h3 = harmonic(m, 3);
    let h4 = harmonic(m, 4);
    let poly: Rational = match k {
        1 => Rational::from(1),
        2 => h1,
        3 => (h1.clone() * &h1 - &h2) / 2,
        4 => {
            let cube = (h1.clone() * &h1) * &h1;
            (cube - (3 * h1.clone() * &h2) + (2 * h3)) / 6
        }
        _ => {
            let sq = h1.clone() * &h1;
            let quart = Rational::from(&sq * &sq);
            let v = quart - (6 * h4) - (6 * sq * &h2) + (3 * h2.clone() * &h2) + (8 * h1 * &h3);
            v / 24
        }
    };
    Ok(poly * factorial(m))
}
