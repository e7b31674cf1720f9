use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use rug::ops::Pow;
use rug::{Integer, Rational};

/// Prefix tables are only retained up to this index; larger `n` continue
/// from the last cached value without storing.
const CACHE_LIMIT: u64 = 4096;

type Tables = RwLock<HashMap<u32, Vec<Rational>>>;

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

fn inv_pow(j: u64, m: u32) -> Rational {
    Rational::from((Integer::from(1), Integer::from(j).pow(m)))
}

/// The generalized harmonic number `H_n^(m) = sum_{j=1}^n 1/j^m`; zero for `n = 0`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn harmonic(n: u64, m: u32) -> Rational {
    assert!(m >= 1, "harmonic order must be positive");
    if n == 0 {
        return Rational::new();
    }
    {
        let guard = tables().read().unwrap();
        if let Some(table) = guard.get(&m) {
            if let Some(v) = table.get(n as usize) {
                return v.clone();
            }
        }
    }
    let mut guard = tables().write().unwrap();
    let table = guard.entry(m).or_insert_with(|| vec![Rational::new()]);
    let grow_to = n.min(CACHE_LIMIT);
    while (table.len() as u64) <= grow_to {
        let j = table.len() as u64;
        let next = table.last().unwrap() + inv_pow(j, m);
        table.push(next);
    }
    if n <= CACHE_LIMIT {
        return table[n as usize].clone();
    }
    let start = (table.len() - 1) as u64;
    let mut acc = table[start as usize].clone();
    drop(guard);
    for j in start + 1..=n {
        acc += inv_pow(j, m);
    }
    acc
}

/// The harmonic numbers `H_n^(1..=max_order)` at a fixed index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicVector {
    n: u64,
    values: BTreeMap<u32, Rational>,
}

impl HarmonicVector {
    pub fn new(n: u64, max_order: u32) -> Self {
        let values = (1..=max_order).map(|m| (m, harmonic(n, m))).collect();
        HarmonicVector { n, values }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn max_order(&self) -> u32 {
        self.values.keys().next_back().copied().unwrap_or(0)
    }

    /// `H_n^(m)`, computed on demand if `m` exceeds the stored orders.
    pub fn get(&self, m: u32) -> Rational {
        match self.values.get(&m) {
            Some(v) => v.clone(),
            None => harmonic(self.n, m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn small_values() {
        assert_eq!(harmonic(0, 1), 0);
        assert_eq!(harmonic(3, 1), q(11, 6));
        assert_eq!(harmonic(2, 2), q(5, 4));
    }

    #[test]
    fn step_relation() {
        for m in 1..=4 {
            for n in 1..=40u64 {
                let step = harmonic(n, m) - harmonic(n - 1, m);
                assert_eq!(step, inv_pow(n, m));
            }
        }
    }

    #[test]
    fn beyond_cache_limit_matches_direct_sum() {
        let n = CACHE_LIMIT + 5;
        let direct: Rational = (1..=n).fold(Rational::new(), |acc, j| acc + inv_pow(j, 3));
        assert_eq!(harmonic(n, 3), direct);
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || harmonic(200 + t, 2)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let direct: Rational = (1..=200 + t as u64).fold(Rational::new(), |acc, j| acc + inv_pow(j, 2));
            assert_eq!(h.join().unwrap(), direct);
        }
    }

    #[test]
    fn vector_zero_index() {
        let v = HarmonicVector::new(0, 4);
        for m in 1..=5 {
            assert_eq!(v.get(m), 0);
        }
        assert_eq!(v.max_order(), 4);
    }
}
