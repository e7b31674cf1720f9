use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rug::Rational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A named parameter assignment such as `k=3, x=-1/2`. Ordered by key, then
/// value, which gives the canonical result order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<String, Rational>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Rational>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Rational> {
        self.0.get(key)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn rat(&self, key: &str) -> Result<Rational> {
        self.get(key)
            .cloned()
            .ok_or_else(|| Error::domain(format!("missing parameter `{key}`")))
    }

    /// A nonnegative integer parameter.
    pub fn int(&self, key: &str) -> Result<u32> {
        let v = self.rat(key)?;
        if !v.is_integer() || v < 0 {
            return Err(Error::domain(format!(
                "parameter `{key}` must be a nonnegative integer, got {v}"
            )));
        }
        v.numer()
            .to_u32()
            .ok_or_else(|| Error::domain(format!("parameter `{key}` is too large")))
    }

    /// Every key of `other` is present here with the same value.
    pub fn agrees_with(&self, other: &Params) -> bool {
        other.iter().all(|(k, v)| self.get(k) == Some(v))
    }

    /// Cartesian product of value lists, e.g. `grid(&[("k", 1..=6), ...])`.
    pub fn grid(axes: &[(&str, Vec<Rational>)]) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for (key, values) in axes {
            out = out
                .into_iter()
                .flat_map(|p| values.iter().map(move |v| p.clone().with(key, v.clone())))
                .collect();
        }
        out
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Params {
    type Err = Error;
    /// Parses `k=3,x=-1/2`; the empty string is the empty assignment.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Params::new();
        let mut offset = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            if !trimmed.is_empty() {
                let (k, v) = trimmed
                    .split_once('=')
                    .ok_or_else(|| Error::parse(offset, format!("expected key=value, got `{trimmed}`")))?;
                let value: Rational = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(offset, format!("bad rational `{}`", v.trim())))?;
                out = out.with(k.trim(), value);
            }
            offset += part.len() + 1;
        }
        Ok(out)
    }
}

/// JSON object; integers as numbers, other rationals as `"p/q"` strings.
impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            match v.numer().to_i64().filter(|_| v.is_integer()) {
                Some(i) => map.serialize_entry(k, &i)?,
                None => map.serialize_entry(k, &v.to_string())?,
            }
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_and_order() {
        let p: Params = "x=-1/2, k=3".parse().unwrap();
        assert_eq!(p.to_string(), "k=3,x=-1/2");
        assert_eq!(p.int("k").unwrap(), 3);
        assert!(p.int("x").is_err());
        assert!(p.int("m").is_err());
        assert!("".parse::<Params>().unwrap().is_empty());
        assert!(matches!(
            "k=1,m".parse::<Params>(),
            Err(Error::Parse { position: 4, .. })
        ));
        let a = Params::new().with("k", 2);
        let b = Params::new().with("k", 10);
        assert!(a < b);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"k":3,"x":"-1/2"}"#);
    }

    #[test]
    fn grid_is_a_cartesian_product() {
        let g = Params::grid(&[
            ("k", vec![Rational::from(1), Rational::from(2)]),
            ("x", vec![Rational::from((1, 2)), Rational::from(-1), Rational::from(0)]),
        ]);
        assert_eq!(g.len(), 6);
        assert!(g[0].agrees_with(&Params::new().with("k", 1)));
    }
}
