use std::fmt;

use rug::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A summand numerator built from harmonic numbers of index `n`:
/// `prod (H_n^(m))^e`, optionally times the Bell value `Y_k(n)`.
///
/// With `bell_signed`, the Bell polynomial is taken at
/// `x_m = (-1)^{m-1} (m-1)! H_n^(m)`, so `k = 3` gives
/// `H^3 - 3 H H^(2) + 2 H^(3)`.
///
/// JSON: either a bare factor list such as `[[1,3]]` or an object
/// `{"factors": [...], "bell_k": 3, "bell_signed": true}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKind {
    pub factors: Vec<(u32, u32)>,
    pub bell_k: Option<u32>,
    pub bell_signed: bool,
}

impl TermKind {
    /// Factors are merged by order and sorted; zero exponents are dropped.
    pub fn product(factors: &[(u32, u32)]) -> Self {
        let mut merged: Vec<(u32, u32)> = Vec::new();
        for &(m, e) in factors {
            if e == 0 {
                continue;
            }
            match merged.iter_mut().find(|(mm, _)| *mm == m) {
                Some(slot) => slot.1 += e,
                None => merged.push((m, e)),
            }
        }
        merged.sort_unstable();
        TermKind {
            factors: merged,
            bell_k: None,
            bell_signed: false,
        }
    }

    pub fn bell(k: u32, signed: bool) -> Self {
        TermKind {
            factors: Vec::new(),
            bell_k: Some(k),
            bell_signed: signed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.iter().any(|&(m, e)| m == 0 || e == 0) {
            return Err(Error::domain("harmonic factors need positive order and exponent"));
        }
        Ok(())
    }

    /// Largest harmonic order needed to evaluate the term.
    pub fn max_order(&self) -> u32 {
        let f = self.factors.iter().map(|&(m, _)| m).max().unwrap_or(0);
        f.max(self.bell_k.unwrap_or(0)).max(1)
    }

    /// Total power of `H_n = H_n^(1)`, i.e. the power of `ln n` in the growth.
    pub fn log_power(&self) -> u32 {
        let f: u32 = self.factors.iter().filter(|&&(m, _)| m == 1).map(|&(_, e)| e).sum();
        f + self.bell_k.unwrap_or(0)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TermRepr {
    Factors(Vec<(u32, u32)>),
    Full {
        #[serde(default)]
        factors: Vec<(u32, u32)>,
        #[serde(default)]
        bell_k: Option<u32>,
        #[serde(default)]
        bell_signed: bool,
    },
}

impl Serialize for TermKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.bell_k.is_none() && !self.bell_signed {
            TermRepr::Factors(self.factors.clone()).serialize(s)
        } else {
            TermRepr::Full {
                factors: self.factors.clone(),
                bell_k: self.bell_k,
                bell_signed: self.bell_signed,
            }
            .serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for TermKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match TermRepr::deserialize(d)? {
            TermRepr::Factors(factors) => TermKind {
                factors,
                ..TermKind::default()
            },
            TermRepr::Full {
                factors,
                bell_k,
                bell_signed,
            } => TermKind {
                factors,
                bell_k,
                bell_signed,
            },
        })
    }
}

/// Rationals travel through JSON as strings such as `"-1/2"`; bare integers
/// are accepted on input.
pub(crate) mod rational_str {
    use rug::Rational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(i) => Ok(Rational::from(i)),
            Repr::Text(t) => {
                let q: Rational = t.trim().parse().map_err(D::Error::custom)?;
                Ok(q)
            }
        }
    }
}

/// Left-hand sides: infinite series and integrals with explicit sign
/// conventions. Every kind documents its own summation range and sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum SeriesSpec {
    /// `sum_{n>=1} f(n) / (n+k) * (-1)^{n+k}`.
    AltShifted { term: TermKind, k: u32 },
    /// `sum_{n>=1} f(n) / n^p * (-1)^{n-1}`, `p >= 1`.
    AltOverN { term: TermKind, p: u32 },
    /// `sum_{n>=1} prod H_n^(m_i) / (n^p C(n+k,k)) * (-1)^{n+1}`.
    WbarAlt { orders: Vec<u32>, p: u32, k: u32 },
    /// `sum_{n>=1} prod H_n^(m_i) / (n^p C(n+k,k))`, no sign.
    WbarPlain { orders: Vec<u32>, p: u32, k: u32 },
    /// `sum_{n>=1} f(n) / n^p`, no sign, `p >= 2`.
    PlainOverN { term: TermKind, p: u32 },
    /// `sum_{n>=1} f(n) x^{n+shift} / (n+shift)^p` for `-1 <= x < 1`.
    PowerSeriesAt {
        term: TermKind,
        #[serde(with = "rational_str")]
        x: Rational,
        p: u32,
        shift: u32,
    },
    /// `sum_{n>=1} y^n / n^m * sum_{j<=n} x^j / j^p` with
    /// `m = outer_power`, `y = outer_x`, `p = inner_power`, `x = inner_x`.
    Nested {
        outer_power: u32,
        #[serde(with = "rational_str")]
        outer_x: Rational,
        inner_power: u32,
        #[serde(with = "rational_str")]
        inner_x: Rational,
    },
    /// `(-1)^m m! sum_{n>=m} s(n+1,m+1) / ((n+k) n!) x^{n+k} + ln^{m+1}(1-x) / (m+1)`.
    Lemma21LHS {
        m: u32,
        k: u32,
        #[serde(with = "rational_str")]
        x: Rational,
    },
    /// `sum_{n>=1} H_n^(m) / (n+k) x^{n+k}`.
    Lemma22LHS {
        m: u32,
        k: u32,
        #[serde(with = "rational_str")]
        x: Rational,
    },
    /// `sum_{n>=1} H_n H_n^(m) x^n` for `-1 < x < 1`.
    Lemma24LHS {
        m: u32,
        #[serde(with = "rational_str")]
        x: Rational,
    },
    /// `sum_{n>=1} H_n H_n^(2) x^n` for `-1 < x < 1`.
    Thm25LHS {
        #[serde(with = "rational_str")]
        x: Rational,
    },
    /// Both nested sums of the reflection pair:
    /// `sum y^n/n^m sum_{j<=n} x^j/j^p + sum x^n/n^p sum_{j<=n} y^j/j^m`.
    Reflection {
        p: u32,
        m: u32,
        #[serde(with = "rational_str")]
        x: Rational,
        #[serde(with = "rational_str")]
        y: Rational,
    },
    /// `int_0^z ln^m(1+x) / x dx` for `0 <= z <= 1`.
    IntLn1px {
        m: u32,
        #[serde(with = "rational_str")]
        z: Rational,
    },
    /// `int_0^1 t^{n-1} ln^kpow(1-t) dt`.
    IntBeta { n: u32, kpow: u32 },
    /// `int_0^1 ln^m(1-x) / (1+x) dx`.
    IntLn1mxOver1px { m: u32 },
    /// `int_0^x t^{n-1} ln(1-t) dt` for `-1 <= x < 1`.
    IntLn1mPartial {
        n: u32,
        #[serde(with = "rational_str")]
        x: Rational,
    },
    /// `sum_{n>=1} 1/n^p * sum_{j<=n} (-1)^{j-1}/j`, `p >= 2`.
    NestedEta { p: u32 },
    /// `sum_{i=1}^{k-1} sum_{n>=1} H_n / (n^2 (n+i)) * (-1)^{n+i}`.
    ShiftedOverSquare { k: u32 },
}

impl SeriesSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series specs always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
