//! Exact algebra of closed-form constants.
//!
//! A [`ConstExpr`] is a rational linear combination of products of
//! [`ConstAtom`]s. Products are multisets, so `ln^4 2` is four `LnTwo`
//! atoms. Expressions are kept normalized: identical products are merged and
//! zero coefficients dropped, so structural equality is meaningful.

mod builders;
mod text;

pub use builders::*;
pub use text::parse_expr;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::{mhs_star, Composition};
use crate::numerics::{self, PrecisionConfig, ValueWithError};
use crate::reductions::{eval_series, SeriesSpec};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstAtom {
    /// `zeta(s)`, `s >= 2`.
    Zeta(u32),
    LnTwo,
    /// `Li_p(1/2)`, `p >= 2`.
    LiHalf(u32),
    /// The finite sum `zeta*_n(s)`, with `n >= 1` and `s` nonempty.
    MhsStar {
        n: u64,
        s: Composition,
    },
    /// `ln r` for rational `r > 1` that is not a power of two.
    Ln(Rational),
    /// `Li_p(x)` for `p >= 2` and rational `0 < |x| < 1`, `x != 1/2`.
    Li {
        p: u32,
        x: Rational,
    },
    /// The numeric value of an infinite series or integral.
    Series(Box<SeriesSpec>),
}

/// Rational combination of atom products. The empty product is the
/// constant term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConstExpr {
    terms: BTreeMap<Vec<ConstAtom>, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Sub,
    Mul,
}

/// `a op (scalar * b)`, with `scalar` defaulting to one.
pub fn expr_combine(a: &ConstExpr, b: &ConstExpr, op: CombineOp, scalar: Option<&Rational>) -> ConstExpr {
    let scaled;
    let b = match scalar {
        Some(q) => {
            scaled = b.scale(q);
            &scaled
        }
        None => b,
    };
    match op {
        CombineOp::Add => a + b,
        CombineOp::Sub => a - b,
        CombineOp::Mul => a * b,
    }
}

impl ConstExpr {
    pub fn zero() -> Self {
        ConstExpr::default()
    }

    pub fn one() -> Self {
        ConstExpr::rational(Rational::from(1))
    }

    pub fn rational(q: impl Into<Rational>) -> Self {
        let mut e = ConstExpr::zero();
        e.add_term(Vec::new(), q.into());
        e
    }

    /// `num / den` as a constant.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn q(num: i64, den: i64) -> Self {
        ConstExpr::rational(Rational::from((num, den)))
    }

    fn from_atom(atom: ConstAtom) -> Self {
        let mut e = ConstExpr::zero();
        e.add_term(vec![atom], Rational::from(1));
        e
    }

    /// # Panics
    ///
    /// Panics if `s < 2`.
    pub fn zeta(s: u32) -> Self {
        assert!(s >= 2, "zeta({s}) is not a finite constant");
        ConstExpr::from_atom(ConstAtom::Zeta(s))
    }

    pub fn ln2() -> Self {
        ConstExpr::from_atom(ConstAtom::LnTwo)
    }

    /// `Li_p(1/2)`; `p = 1` gives `ln 2`.
    ///
    /// # Panics
    ///
    /// Panics if `p` is zero.
    pub fn li_half(p: u32) -> Self {
        assert!(p >= 1, "Li_0(1/2) is not used");
        if p == 1 {
            ConstExpr::ln2()
        } else {
            ConstExpr::from_atom(ConstAtom::LiHalf(p))
        }
    }

    /// `zeta*_n(s)`; the empty composition gives 1 and `n = 0` gives 0.
    pub fn mhs(n: u64, s: Composition) -> Self {
        if s.is_empty() {
            ConstExpr::one()
        } else if n == 0 {
            ConstExpr::zero()
        } else {
            ConstExpr::from_atom(ConstAtom::MhsStar { n, s })
        }
    }

    /// `zeta*_n(s)` from signed entries.
    ///
    /// # Panics
    ///
    /// Panics if an entry is zero.
    pub fn zsk(n: u64, s: &[i32]) -> Self {
        ConstExpr::mhs(n, Composition::new(s.to_vec()).expect("nonzero composition entries"))
    }

    /// `ln r` for rational `r > 0`, normalized so that powers of two become
    /// multiples of `ln 2` and arguments below one are inverted.
    pub fn ln(r: &Rational) -> Result<Self> {
        if *r <= 0 {
            return Err(Error::domain(format!("ln({r}) is not real")));
        }
        if *r < 1 {
            return Ok(-ConstExpr::ln(&Rational::from(r.recip_ref()))?);
        }
        if *r == 1 {
            return Ok(ConstExpr::zero());
        }
        if r.denom() == &1 {
            let num = r.numer();
            if num.is_power_of_two() {
                let j = num.significant_bits() - 1;
                return Ok(ConstExpr::ln2().scale(&Rational::from(j)));
            }
        }
        Ok(ConstExpr::from_atom(ConstAtom::Ln(r.clone())))
    }

    /// `Li_p(x)` for rational `|x| <= 1`, reduced to zeta values, `ln`, and
    /// `Li_p(1/2)` where possible.
    pub fn li(p: u32, x: &Rational) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("polylog order must be >= 1"));
        }
        let ax = Rational::from(x.abs_ref());
        if ax > 1 {
            return Err(Error::domain(format!("Li_{p}({x}) needs |x| <= 1")));
        }
        if *x == 0 {
            return Ok(ConstExpr::zero());
        }
        if p == 1 {
            if *x == 1 {
                return Err(Error::domain("Li_1(1) diverges"));
            }
            return Ok(-ConstExpr::ln(&Rational::from(1 - x))?);
        }
        if *x == 1 {
            return Ok(ConstExpr::zeta(p));
        }
        if *x == -1 {
            // Li_p(-1) = -(1 - 2^{1-p}) zeta(p)
            let factor = Rational::from(1) - Rational::from((1, Integer::from(1) << (p - 1)));
            return Ok(ConstExpr::zeta(p).scale(&-factor));
        }
        if *x.numer() == 1 && *x.denom() == 2 {
            return Ok(ConstExpr::li_half(p));
        }
        Ok(ConstExpr::from_atom(ConstAtom::Li { p, x: x.clone() }))
    }

    pub fn series(spec: SeriesSpec) -> Self {
        ConstExpr::from_atom(ConstAtom::Series(Box::new(spec)))
    }

    fn add_term(&mut self, mut atoms: Vec<ConstAtom>, coeff: Rational) {
        if coeff == 0 {
            return;
        }
        atoms.sort();
        match self.terms.entry(atoms) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if *q == 0 {
            return ConstExpr::zero();
        }
        ConstExpr {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), Rational::from(c * q)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(ConstExpr::one(), |acc, _| &acc * self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: `(coefficient, sorted atom product)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &[ConstAtom])> {
        self.terms.iter().map(|(a, c)| (c, a.as_slice()))
    }

    /// The constant term, if any.
    pub fn constant(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &ConstAtom> {
        self.terms.keys().flatten()
    }

    pub fn has_mhs_atoms(&self) -> bool {
        self.atoms().any(|a| matches!(a, ConstAtom::MhsStar { .. }))
    }
}

impl Add<&ConstExpr> for &ConstExpr {
    type Output = ConstExpr;
    fn add(self, rhs: &ConstExpr) -> ConstExpr {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Sub<&ConstExpr> for &ConstExpr {
    type Output = ConstExpr;
    fn sub(self, rhs: &ConstExpr) -> ConstExpr {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), Rational::from(-c));
        }
        out
    }
}

impl Mul<&ConstExpr> for &ConstExpr {
    type Output = ConstExpr;
    fn mul(self, rhs: &ConstExpr) -> ConstExpr {
        let mut out = ConstExpr::zero();
        for (a1, c1) in &self.terms {
            for (a2, c2) in &rhs.terms {
                let mut atoms = a1.clone();
                atoms.extend(a2.iter().cloned());
                out.add_term(atoms, Rational::from(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &ConstExpr {
    type Output = ConstExpr;
    fn neg(self) -> ConstExpr {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for ConstExpr {
    type Output = ConstExpr;
    fn neg(self) -> ConstExpr {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<ConstExpr> for ConstExpr {
            type Output = ConstExpr;
            fn $f(self, rhs: ConstExpr) -> ConstExpr {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&ConstExpr> for ConstExpr {
            type Output = ConstExpr;
            fn $f(self, rhs: &ConstExpr) -> ConstExpr {
                (&self).$f(rhs)
            }
        }
        impl $tr<ConstExpr> for &ConstExpr {
            type Output = ConstExpr;
            fn $f(self, rhs: ConstExpr) -> ConstExpr {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::iter::Sum for ConstExpr {
    fn sum<I: Iterator<Item = ConstExpr>>(iter: I) -> Self {
        iter.fold(ConstExpr::zero(), |acc, e| acc + e)
    }
}

impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl std::str::FromStr for ConstExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

/// Evaluates every term; the result's error bound collects the error
/// estimates of any `Series` atoms, propagated to first order.
pub fn eval_expr_with_error(e: &ConstExpr, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let bits = cfg.bits();
    let mut memo: HashMap<&ConstAtom, (Float, Float)> = HashMap::new();
    let mut total = Float::new(bits + 16);
    let mut error = Float::new(bits);
    let mut methods: Vec<String> = Vec::new();
    for (coeff, atoms) in e.terms() {
        let mut values = Vec::with_capacity(atoms.len());
        for atom in atoms {
            if !memo.contains_key(atom) {
                let v = eval_atom(atom, cfg)?;
                if let ConstAtom::Series(_) = atom {
                    methods.push(v.method.clone());
                }
                memo.insert(atom, (v.value, v.error_bound));
            }
            values.push(memo[atom].clone());
        }
        let mut product = Float::with_val(bits + 16, coeff);
        for (v, _) in &values {
            product *= v;
        }
        for (i, (_, err)) in values.iter().enumerate() {
            if err.is_zero() {
                continue;
            }
            let mut rest = Float::with_val(bits, coeff).abs();
            for (j, (v, _)) in values.iter().enumerate() {
                if i != j {
                    rest *= Float::with_val(bits, v.abs_ref());
                }
            }
            error += rest * err;
        }
        total += product;
    }
    let method = if methods.is_empty() {
        "closed form".to_string()
    } else {
        format!("closed form with {}", methods.join(", "))
    };
    Ok(ValueWithError {
        value: Float::with_val(bits, total),
        error_bound: error,
        method,
    })
}

/// `sum coeff * prod atoms` at the working precision of `cfg`.
pub fn eval_expr(e: &ConstExpr, cfg: &PrecisionConfig) -> Result<Float> {
    Ok(eval_expr_with_error(e, cfg)?.value)
}

pub fn eval_atom(atom: &ConstAtom, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let bits = cfg.bits();
    let exact = |v: Float| Ok(ValueWithError::exact(v, "constant"));
    match atom {
        ConstAtom::Zeta(s) => exact(numerics::zeta_int(*s, cfg)?),
        ConstAtom::LnTwo => exact(numerics::ln2(cfg)?),
        ConstAtom::LiHalf(p) => exact(numerics::li_half(*p, cfg)?),
        ConstAtom::MhsStar { n, s } => exact(Float::with_val(bits, &mhs_star(*n, s))),
        ConstAtom::Ln(r) => {
            if *r <= 0 {
                return Err(Error::domain(format!("ln({r}) is not real")));
            }
            exact(Float::with_val(bits + 16, r).ln())
        }
        ConstAtom::Li { p, x } => exact(numerics::polylog_rational(*p, x, cfg)?),
        ConstAtom::Series(spec) => eval_series(spec, cfg),
    }
}
