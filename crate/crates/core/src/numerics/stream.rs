use rug::{Float, Integer};

/// Generalized harmonic numbers `H_n^(1..=max_order)` advanced one index at
/// a time, so series terms never recompute the prefix sums.
#[derive(Clone, Debug)]
pub struct HarmonicStream {
    n: u64,
    bits: u32,
    values: Vec<Float>,
}

impl HarmonicStream {
    /// Starts at `n = 0`, where every value is zero.
    pub fn new(max_order: u32, bits: u32) -> Self {
        HarmonicStream {
            n: 0,
            bits,
            values: (0..max_order).map(|_| Float::new(bits)).collect(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn max_order(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn advance(&mut self) {
        self.n += 1;
        let mut power = Integer::from(1);
        for value in &mut self.values {
            power *= self.n;
            *value += Float::with_val(self.bits, 1) / &power;
        }
    }

    /// `H_n^(m)` at the current index.
    ///
    /// # Panics
    ///
    /// Panics if `m` is zero or exceeds `max_order`.
    pub fn get(&self, m: u32) -> &Float {
        &self.values[m as usize - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::harmonic;

    #[test]
    fn tracks_exact_values() {
        let mut s = HarmonicStream::new(3, 200);
        for _ in 0..60 {
            s.advance();
        }
        for m in 1..=3 {
            let exact = Float::with_val(200, &harmonic(60, m));
            let diff = Float::with_val(200, s.get(m) - &exact).abs();
            assert!(diff < 1e-55, "m={m}");
        }
    }
}
