//! Right-hand sides of the catalog identities.
//!
//! `zsk(n; s)` below denotes the multiple harmonic star sum `zeta*_n(s)`;
//! most formulas use `n = k - 1`. Finite weighted star sums at a rational
//! argument are exact rationals and are folded into coefficients.

use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use super::ConstExpr;
use crate::error::{Error, Result};
use crate::exact::{bell_y, binomial, factorial, harmonic, mhs_star_weighted_exact};
use crate::reductions::{SeriesSpec, TermKind};

/// The two numerators of the main shifted sums: `H_n H_n^(2)` and `H_n^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Quadratic,
    Cubic,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Quadratic, Family::Cubic];

    /// Harmonic orders of the numerator: `[1, 2]` or `[1, 1, 1]`.
    pub fn orders(self) -> Vec<u32> {
        match self {
            Family::Quadratic => vec![1, 2],
            Family::Cubic => vec![1, 1, 1],
        }
    }

    pub fn term(self) -> TermKind {
        match self {
            Family::Quadratic => TermKind::product(&[(1, 1), (2, 1)]),
            Family::Cubic => TermKind::product(&[(1, 3)]),
        }
    }

    /// Closed form of `sum f(n)/n (-1)^{n-1}`.
    pub fn over_n(self) -> ConstExpr {
        match self {
            Family::Quadratic => alt_hh2_over_n(),
            Family::Cubic => alt_h3_over_n(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Quadratic => "quadratic",
            Family::Cubic => "cubic",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quadratic" => Ok(Family::Quadratic),
            "cubic" => Ok(Family::Cubic),
            other => Err(Error::parse(0, format!("unknown family `{other}`"))),
        }
    }
}

/// Numerators of the companion shifted sums: the signed Bell combination
/// `H^3 - 3 H H^(2) + 2 H^(3)` and `H^(3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cor29 {
    Y3Combo,
    H3Order,
}

fn q(num: i64, den: i64) -> ConstExpr {
    ConstExpr::q(num, den)
}

fn z(s: u32) -> ConstExpr {
    ConstExpr::zeta(s)
}

fn l() -> ConstExpr {
    ConstExpr::ln2()
}

fn l_pow(e: u32) -> ConstExpr {
    ConstExpr::ln2().pow(e)
}

fn li_half(p: u32) -> ConstExpr {
    ConstExpr::li_half(p)
}

fn qr(r: Rational) -> ConstExpr {
    ConstExpr::rational(r)
}

fn check_k(k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::domain("k must be a positive integer"));
    }
    Ok(u64::from(k) - 1)
}

/// Closed form of `sum_{n>=1} f(n)/(n+k) (-1)^{n+k}` for `f = H_n H_n^(2)`
/// (quadratic) or `f = H_n^3` (cubic).
pub fn rhs_thm11(family: Family, k: u32) -> Result<ConstExpr> {
    let n = check_k(k)?;
    let s = |e: &[i32]| ConstExpr::zsk(n, e);
    let d = |a: &[i32], b: &[i32]| s(a) - s(b);
    Ok(match family {
        Family::Quadratic => {
            q(-5, 16) * z(4) - q(1, 4) * z(2) * l_pow(2) + q(7, 8) * z(3) * l() + q(7, 8) * z(3) * s(&[-1])
                - q(1, 4) * z(3) * s(&[1])
                - q(1, 2) * z(2) * s(&[-2])
                - s(&[3, -1])
                + s(&[1, 2, -1])
                + q(1, 2) * z(2) * s(&[1, -1])
                + s(&[2, 1, -1])
                + l() * d(&[-3], &[3])
                - q(1, 2) * l() * z(2) * d(&[-1], &[1])
                + q(1, 2) * l_pow(2) * d(&[-2], &[2])
                - l() * d(&[2, -1], &[2, 1])
                - l() * d(&[1, -2], &[1, 2])
        }
        Family::Cubic => {
            q(-5, 16) * z(4) + q(9, 8) * z(3) * l() - q(3, 4) * z(2) * l_pow(2)
                + q(1, 4) * l_pow(4)
                + q(9, 8) * z(3) * s(&[-1])
                - q(1, 2) * z(2) * s(&[-2])
                - s(&[3, -1])
                + q(3, 2) * z(2) * s(&[1, -1])
                - q(3, 4) * z(3) * s(&[1])
                + q(3, 1) * s(&[1, 2, -1])
                + q(3, 1) * s(&[2, 1, -1])
                - q(6, 1) * s(&[1, 1, 1, -1])
                + l() * d(&[-3], &[3])
                - q(3, 1) * l() * d(&[2, -1], &[2, 1])
                - q(3, 1) * l() * d(&[1, -2], &[1, 2])
                + q(6, 1) * l() * d(&[1, 1, -1], &[1, 1, 1])
                - q(3, 1) * l_pow(2) * d(&[1, -1], &[1, 1])
                + q(3, 2) * l_pow(2) * d(&[-2], &[2])
                + (l_pow(3) - q(3, 2) * l() * z(2)) * d(&[-1], &[1])
        }
    })
}

/// Closed forms of `sum_{n>=1} g(n)/(n+k) (-1)^{n+k}` for the companion
/// numerators of [`Cor29`].
pub fn rhs_cor29(which: Cor29, k: u32) -> Result<ConstExpr> {
    let n = check_k(k)?;
    let s = |e: &[i32]| ConstExpr::zsk(n, e);
    let d = |a: &[i32], b: &[i32]| s(a) - s(b);
    Ok(match which {
        Cor29::Y3Combo => {
            q(1, 4) * l_pow(4) - q(6, 1) * s(&[1, 1, 1, -1]) + l_pow(3) * d(&[-1], &[1])
                - q(3, 1) * l_pow(2) * d(&[1, -1], &[1, 1])
                + q(6, 1) * l() * d(&[1, 1, -1], &[1, 1, 1])
        }
        Cor29::H3Order => {
            q(-5, 16) * z(4) + q(3, 4) * z(3) * l() + l() * d(&[-3], &[3]) + q(3, 4) * z(3) * s(&[-1])
                - q(1, 2) * z(2) * s(&[-2])
                - s(&[3, -1])
        }
    })
}

fn alt_h3_over_n() -> ConstExpr {
    q(5, 8) * z(4) + q(3, 4) * z(2) * l_pow(2) - q(1, 4) * l_pow(4) - q(9, 8) * z(3) * l()
}

fn alt_hh2_over_n() -> ConstExpr {
    q(2, 1) * li_half(4) + q(1, 12) * l_pow(4) + q(7, 8) * z(3) * l() - q(1, 4) * z(2) * l_pow(2) - z(4)
}

fn int_ln3_1px() -> ConstExpr {
    q(6, 1) * z(4) + q(3, 2) * z(2) * l_pow(2) - q(1, 4) * l_pow(4) - q(21, 4) * z(3) * l() - q(6, 1) * li_half(4)
}

fn int_ln4_1px() -> ConstExpr {
    q(-24, 1) * li_half(5) - q(24, 1) * l() * li_half(4) - q(4, 5) * l_pow(5) - q(21, 2) * z(3) * l_pow(2)
        + q(24, 1) * z(5)
        + q(4, 1) * z(2) * l_pow(3)
}

/// Names accepted by [`rhs_known`]; the parameterized ones need `m`.
pub const KNOWN_NAMES: &[&str] = &[
    "cor28_h3",
    "cor28_hh2",
    "cor28_y3",
    "cor28_y3plus",
    "nested_eta3",
    "alt_h3_n",
    "alt_h_n3",
    "thm27",
    "int_ln3_1px",
    "int_ln4_1px",
    "int_ln_1mx_over_1px",
    "intro_w7",
    "intro_w9a",
    "intro_w9b",
    "cor31_cubic",
    "cor31_quadratic",
];

/// Fixed closed forms by name. `thm27` and `int_ln_1mx_over_1px` take the
/// parameter `m >= 1`.
pub fn rhs_known(name: &str, m: Option<u32>) -> Result<ConstExpr> {
    let need_m = || match m {
        Some(m) if m >= 1 => Ok(m),
        _ => Err(Error::domain(format!("`{name}` needs a parameter m >= 1"))),
    };
    Ok(match name {
        // sum H^3/n (-1)^{n-1}
        "cor28_h3" => alt_h3_over_n(),
        // sum H H^(2)/n (-1)^{n-1}
        "cor28_hh2" => alt_hh2_over_n(),
        // sum (H^3 - 3 H H^(2) + 2 H^(3))/n (-1)^{n-1}
        "cor28_y3" => int_ln3_1px() - q(1, 4) * l_pow(4),
        // sum (H^3 + 3 H H^(2) + 2 H^(3))/n (-1)^{n-1}
        "cor28_y3plus" => q(6, 1) * li_half(4),
        // sum 1/n^3 sum_{j<=n} (-1)^{j-1}/j
        "nested_eta3" => q(7, 4) * z(3) * l() - q(5, 16) * z(4),
        // sum H^(3)/n (-1)^{n-1}
        "alt_h3_n" => q(19, 16) * z(4) - q(3, 4) * z(3) * l(),
        // sum H/n^3 (-1)^{n-1}
        "alt_h_n3" => {
            q(-2, 1) * li_half(4) + q(11, 4) * z(4) + q(1, 2) * z(2) * l_pow(2)
                - q(1, 12) * l_pow(4)
                - q(7, 4) * z(3) * l()
        }
        "thm27" => {
            let m = need_m()?;
            qr(Rational::from(factorial(u64::from(m)))) * li_half(m + 1)
        }
        "int_ln3_1px" => int_ln3_1px(),
        "int_ln4_1px" => int_ln4_1px(),
        "int_ln_1mx_over_1px" => {
            let m = need_m()?;
            let mut c = Rational::from(factorial(u64::from(m)));
            if m % 2 == 1 {
                c = -c;
            }
            qr(c) * li_half(m + 1)
        }
        "intro_w7" => q(231, 16) * z(7) - q(51, 4) * z(3) * z(4) + q(2, 1) * z(2) * z(5),
        "intro_w9a" => {
            q(-1069, 36) * z(9) + q(4, 3) * z(3).pow(3) + q(7, 1) * z(2) * z(7) - q(4, 3) * z(3) * z(6)
                + q(33, 2) * z(4) * z(5)
        }
        "intro_w9b" => {
            q(-617, 72) * z(9) + z(3).pow(3) + q(91, 8) * z(2) * z(7)
                - q(17, 4) * z(4) * z(5)
                - q(329, 84) * z(3) * z(6)
        }
        // sum H^3/(n+2) (-1)^n
        "cor31_cubic" => {
            q(-5, 16) * z(4) + q(9, 8) * z(3) * l() - q(3, 4) * z(2) * l_pow(2) + q(1, 4) * l_pow(4) - q(2, 1) * l()
                + q(3, 1) * l_pow(2)
                - q(2, 1) * l_pow(3)
                + q(3, 1) * z(2) * l()
                - q(15, 8) * z(3)
                - z(2)
                + ConstExpr::one()
        }
        // sum H H^(2)/(n+2) (-1)^n
        "cor31_quadratic" => {
            q(-5, 16) * z(4) - q(1, 4) * z(2) * l_pow(2) + q(7, 8) * z(3) * l() - q(9, 8) * z(3)
                + z(2) * l()
                + q(2, 1) * l()
                - l_pow(2)
                - ConstExpr::one()
        }
        other => return Err(Error::UnknownForm(other.to_string())),
    })
}

/// `sum_{i=1}^{k-1} sum_n H_n/(n^2 (n+i)) (-1)^{n+i}` in closed form.
///
/// The printed derivation carries `+ 1/2 ln^2 2 zsk(k-1; -2)` in its last
/// line; numerically the identity holds with `zsk(k-1; 2)` in that place,
/// which is what this builder uses. See [`rhs_shifted_over_square_printed`].
pub fn rhs_shifted_over_square(k: u32) -> Result<ConstExpr> {
    let n = check_k(k)?;
    let s = |e: &[i32]| ConstExpr::zsk(n, e);
    Ok(shifted_over_square_common(n) + q(1, 2) * l_pow(2) * s(&[2]))
}

/// The same closed form exactly as printed, kept to document the
/// discrepancy: it differs from the true value by
/// `1/2 ln^2 2 (zsk(k-1; -2) - zsk(k-1; 2))`.
pub fn rhs_shifted_over_square_printed(k: u32) -> Result<ConstExpr> {
    let n = check_k(k)?;
    let s = |e: &[i32]| ConstExpr::zsk(n, e);
    Ok(shifted_over_square_common(n) + q(1, 2) * l_pow(2) * s(&[-2]))
}

fn shifted_over_square_common(n: u64) -> ConstExpr {
    let s = |e: &[i32]| ConstExpr::zsk(n, e);
    let d = |a: &[i32], b: &[i32]| s(a) - s(b);
    q(-5, 8) * z(3) * s(&[-1]) + q(1, 2) * (z(2) - l_pow(2)) * s(&[-2]) + l() * d(&[2, -1], &[2, 1])
        - l() * d(&[-3], &[3])
        - s(&[2, 1, -1])
        + s(&[3, -1])
}

fn ln_one_minus(x: &Rational) -> Result<ConstExpr> {
    if *x >= 1 {
        return Err(Error::domain(format!("ln(1 - x) needs x < 1, got {x}")));
    }
    ConstExpr::ln(&Rational::from(1 - x))
}

fn ones(j: usize) -> Vec<u32> {
    vec![1; j]
}

fn ones_then(j: usize, x: &Rational) -> Vec<Rational> {
    let mut w = vec![Rational::from(1); j];
    w.push(x.clone());
    w
}

/// Right-hand side of the Stirling generating-series identity at rational
/// `x` in `[-1, 1)`; its left-hand side is [`SeriesSpec::Lemma21LHS`].
pub fn rhs_lemma21(m: u32, k: u32, x: &Rational) -> Result<ConstExpr> {
    let n = check_k(k)?;
    if m == 0 {
        return Err(Error::domain("m must be a positive integer"));
    }
    let l1 = ln_one_minus(x)?;
    let mu = m as usize;
    let w = |s: Vec<u32>, xs: Vec<Rational>| mhs_star_weighted_exact(n, &s, &xs);
    let mut out = ConstExpr::zero();
    for j in 1..mu {
        let mut c = Rational::from(factorial(j as u64) * binomial(u64::from(m), j as u64));
        if j % 2 == 0 {
            c = -c;
        }
        let diff = w(ones(j + 1), ones_then(j, x))? - w(ones(j + 1), ones_then(j, &Rational::from(1)))?;
        out = out + qr(c * diff) * l1.pow(m - j as u32);
    }
    let diff1 = w(vec![1], vec![x.clone()])? - w(vec![1], vec![Rational::from(1)])?;
    out = out - qr(diff1) * l1.pow(m);
    let mut c = Rational::from(factorial(u64::from(m))) * w(ones(mu + 1), ones_then(mu, x))?;
    if m % 2 == 0 {
        c = -c;
    }
    Ok(out + qr(c))
}

/// Right-hand side for `sum H_n^(m)/(n+k) x^{n+k}`; it involves the series
/// `sum H_n^(m)/n x^n`, kept as a series atom.
pub fn rhs_lemma22(m: u32, k: u32, x: &Rational) -> Result<ConstExpr> {
    let n = check_k(k)?;
    if m == 0 {
        return Err(Error::domain("m must be a positive integer"));
    }
    let l1 = ln_one_minus(x)?;
    let one = Rational::from(1);
    let w = |s: &[u32], xs: &[Rational]| mhs_star_weighted_exact(n, s, xs);
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let mut out = ConstExpr::series(SeriesSpec::PowerSeriesAt {
        term: TermKind::product(&[(m, 1)]),
        x: x.clone(),
        p: 1,
        shift: 0,
    }) - ConstExpr::li(m + 1, x)?;
    for j in 1..m {
        let mut c = w(&[j], std::slice::from_ref(x))?;
        if j % 2 == 0 {
            c = -c;
        }
        out = out - qr(c) * ConstExpr::li(m + 1 - j, x)?;
    }
    let diff = w(&[m], std::slice::from_ref(x))? - w(&[m], std::slice::from_ref(&one))?;
    out = out - qr(diff * sign) * l1;
    let tail = w(&[m, 1], &[one, x.clone()])?;
    Ok(out + qr(tail * sign))
}

/// Right-hand side for `sum H_n H_n^(m) x^n`, `m >= 2`, `-1 < x < 1`.
pub fn rhs_lemma24(m: u32, x: &Rational) -> Result<ConstExpr> {
    if m < 2 {
        return Err(Error::domain("the closed form involves zeta(m), so m >= 2"));
    }
    open_unit(x)?;
    let l1 = ln_one_minus(x)?;
    let inner = ConstExpr::series(SeriesSpec::PowerSeriesAt {
        term: TermKind::product(&[(1, 1)]),
        x: x.clone(),
        p: m,
        shift: 0,
    }) - ConstExpr::series(SeriesSpec::Nested {
        outer_power: m,
        outer_x: Rational::from(1),
        inner_power: 1,
        inner_x: x.clone(),
    }) - z(m) * l1;
    Ok(qr(Rational::from(1 - x).recip()) * inner)
}

/// Right-hand side for `sum H_n H_n^(2) x^n`, `-1 < x < 1`.
pub fn rhs_thm25(x: &Rational) -> Result<ConstExpr> {
    open_unit(x)?;
    let l1 = ln_one_minus(x)?;
    let inner = q(2, 1) * ConstExpr::li(3, x)?
        - l1 * ConstExpr::li(2, x)?
        - ConstExpr::series(SeriesSpec::PowerSeriesAt {
            term: TermKind::product(&[(1, 1)]),
            x: x.clone(),
            p: 2,
            shift: 0,
        });
    Ok(qr(Rational::from(1 - x).recip()) * inner)
}

fn open_unit(x: &Rational) -> Result<()> {
    if *x <= -1 || *x >= 1 {
        return Err(Error::domain(format!("x = {x} must lie in (-1, 1)")));
    }
    Ok(())
}

/// `Li_p(x) Li_m(y) + Li_{p+m}(xy)`.
pub fn rhs_reflection(p: u32, m: u32, x: &Rational, y: &Rational) -> Result<ConstExpr> {
    let xy = Rational::from(x * y);
    Ok(ConstExpr::li(p, x)? * ConstExpr::li(m, y)? + ConstExpr::li(p + m, &xy)?)
}

/// Closed form of `int_0^z ln^m(1+x)/x dx` for rational `0 < z <= 1`.
pub fn rhs_thm26(m: u32, zz: &Rational) -> Result<ConstExpr> {
    if m == 0 {
        return Err(Error::domain("m must be a positive integer"));
    }
    if *zz <= 0 || *zz > 1 {
        return Err(Error::domain(format!("z = {zz} must lie in (0, 1]")));
    }
    let one_plus = Rational::from(1 + zz);
    let lz = ConstExpr::ln(&one_plus)?;
    let u = Rational::from(one_plus.recip_ref());
    let mf = Rational::from(factorial(u64::from(m)));
    let mut out =
        qr(Rational::from((1, m + 1))) * lz.pow(m + 1) + qr(mf.clone()) * (z(m + 1) - ConstExpr::li(m + 1, &u)?);
    for j in 1..=m {
        let c = Rational::from(&mf / factorial(u64::from(m - j + 1)));
        out = out - qr(c) * lz.pow(m - j + 1) * ConstExpr::li(j, &u)?;
    }
    Ok(out)
}

/// `(-1)^k Y_k(n) / n`, the value of `int_0^1 t^{n-1} ln^k(1-t) dt`.
pub fn rhs_beta(n: u32, k: u32) -> Result<ConstExpr> {
    if n == 0 {
        return Err(Error::domain("n must be a positive integer"));
    }
    let mut v = bell_y(k, u64::from(n)) / Integer::from(n);
    if k % 2 == 1 {
        v = -v;
    }
    Ok(qr(v))
}

/// `(1/n) { x^n ln(1-x) - sum_{j<=n} x^j/j - ln(1-x) }`, the value of
/// `int_0^x t^{n-1} ln(1-t) dt`.
pub fn rhs_eq42(n: u32, x: &Rational) -> Result<ConstExpr> {
    if n == 0 {
        return Err(Error::domain("n must be a positive integer"));
    }
    if *x < -1 || *x >= 1 {
        return Err(Error::domain(format!("x = {x} must lie in [-1, 1)")));
    }
    let l1 = ln_one_minus(x)?;
    let xn = x.pow_ref_rational(n);
    let partial = mhs_star_weighted_exact(u64::from(n), &[1], std::slice::from_ref(x))?;
    let inv_n = Rational::from((1, n));
    Ok(qr(&inv_n * (xn - 1u32)) * l1 - qr(inv_n * partial))
}

trait PowRational {
    fn pow_ref_rational(&self, e: u32) -> Rational;
}

impl PowRational for Rational {
    fn pow_ref_rational(&self, e: u32) -> Rational {
        (0..e).fold(Rational::from(1), |acc, _| acc * self)
    }
}

/// Right-hand side of `sum H_n H_n^(2) / (n C(n+k,k))` (no sign): a finite
/// combination of zeta values and harmonic sums over `r <= k`.
pub fn rhs_nonalt_binomial(k: u32) -> Result<ConstExpr> {
    check_k(k)?;
    let mut out = ConstExpr::zero();
    for r in 1..=u64::from(k) {
        let h1 = harmonic(r - 1, 1);
        let h2 = harmonic(r - 1, 2);
        let mut finite = Rational::new();
        let mut nested = Rational::new();
        let mut inner = Rational::new();
        for i in 1..r {
            let hi = harmonic(i, 1);
            let hi2 = harmonic(i, 2);
            let i3 = Integer::from(i).pow_u(3);
            let i2 = Integer::from(i).pow_u(2);
            finite += Rational::from(&hi / &i3);
            finite -= (Rational::from(&hi * &hi) + hi2) / i2 / 2u32;
            inner += Rational::from(&hi / Integer::from(i).pow_u(2));
            nested += Rational::from(&inner / Integer::from(i));
        }
        finite -= nested;
        let bracket = q(2, 1) * z(4) + qr(2 * h1.clone()) * z(3) + qr(Rational::from(&h1 * &h1) / 2u32) * z(2)
            - qr(h2 / 2u32) * z(2)
            + qr(finite);
        let mut c = Rational::from(binomial(u64::from(k), r));
        if r % 2 == 0 {
            c = -c;
        }
        out = out + qr(c) * bracket;
    }
    Ok(out)
}

trait PowU {
    fn pow_u(self, e: u32) -> Integer;
}

impl PowU for Integer {
    fn pow_u(self, e: u32) -> Integer {
        use rug::ops::Pow;
        self.pow(e)
    }
}
