use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed multi-index `(s_1, ..., s_k)` with nonzero entries.
///
/// A negative entry `-n` stands for a barred entry: the summation index
/// carries the sign `(-1)^{n_j}` and the exponent `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Composition(Vec<i32>);

impl Composition {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&s| s == 0) {
            return Err(Error::parse(pos, "composition entries must be nonzero"));
        }
        Ok(Composition(entries))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The composition `{1}_d`.
    pub fn ones(depth: usize) -> Self {
        Composition(vec![1; depth])
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|s| s.unsigned_abs()).sum()
    }

    /// Appends an entry; zero is rejected.
    pub fn push(mut self, entry: i32) -> Result<Self> {
        if entry == 0 {
            return Err(Error::parse(self.0.len(), "composition entries must be nonzero"));
        }
        self.0.push(entry);
        Ok(self)
    }
}

impl TryFrom<Vec<i32>> for Composition {
    type Error = Error;

    fn try_from(entries: Vec<i32>) -> Result<Self> {
        Composition::new(entries)
    }
}

impl From<Composition> for Vec<i32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// Canonical output uses the minus form: `3,-1`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_composition(s)
    }
}

/// Parses comma-separated signed integers. A leading `b` is an alias for
/// the minus sign (`b2` is the barred entry `-2`). Whitespace is ignored and
/// the empty string is the empty composition. Error positions are 0-based
/// token indices.
pub fn parse_composition(text: &str) -> Result<Composition> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Composition::empty());
    }
    let mut entries = Vec::new();
    for (pos, token) in compact.split(',').enumerate() {
        let (negate, digits) = match token.strip_prefix('b').or_else(|| token.strip_prefix('B')) {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        if digits.is_empty() {
            return Err(Error::parse(pos, format!("empty token `{token}`")));
        }
        if negate && (digits.starts_with('-') || digits.starts_with('+')) {
            return Err(Error::parse(pos, format!("malformed barred entry `{token}`")));
        }
        let value: i32 = digits
            .parse()
            .map_err(|_| Error::parse(pos, format!("malformed entry `{token}`")))?;
        if value == 0 {
            return Err(Error::parse(pos, "zero entry is not allowed"));
        }
        entries.push(if negate { -value } else { value });
    }
    Ok(Composition(entries))
}
