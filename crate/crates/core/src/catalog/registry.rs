//! The compiled-in identity list. Record ids name the display they mirror;
//! `paper_ref` holds a short verbatim quote of it.

use rug::Rational;

use super::{ConvergenceClass, IdentityRecord, Params};
use crate::closedform::{self as cf, Cor29, Family};
use crate::error::Result;
use crate::reductions::{SeriesSpec, TermKind};

use ConvergenceClass::{AlgebraicSlow, AlternatingSlow, Fast};

/// Sample points for the power-series identities.
pub const X_SAMPLES: [(i64, i64); 6] = [(-9, 10), (-1, 2), (-1, 3), (1, 3), (1, 2), (9, 10)];

fn ints(lo: i64, hi: i64) -> Vec<Rational> {
    (lo..=hi).map(Rational::from).collect()
}

fn rats(values: &[(i64, i64)]) -> Vec<Rational> {
    values.iter().map(|&v| Rational::from(v)).collect()
}

fn samples() -> Vec<Rational> {
    rats(&X_SAMPLES)
}

fn samples_and_minus_one() -> Vec<Rational> {
    let mut v = rats(&[(-1, 1)]);
    v.extend(samples());
    v
}

fn single() -> Vec<Params> {
    vec![Params::new()]
}

fn k_range() -> Vec<Params> {
    Params::grid(&[("k", ints(1, 6))])
}

#[allow(clippy::too_many_arguments)]
fn rec(
    id: &'static str,
    description: &'static str,
    paper_ref: &'static str,
    domain: Vec<Params>,
    domain_text: &'static str,
    class: ConvergenceClass,
    rhs_builder: &'static str,
    lhs: fn(&Params) -> Result<SeriesSpec>,
    rhs: fn(&Params) -> Result<cf::ConstExpr>,
) -> IdentityRecord {
    IdentityRecord {
        id,
        description,
        paper_ref,
        domain,
        domain_text,
        default_tolerance_digits: if class == AlgebraicSlow { 10 } else { 30 },
        convergence_class: class,
        external_source: false,
        rhs_builder,
        lhs,
        rhs,
    }
}

fn alt_over_n(term: TermKind, p: u32) -> Result<SeriesSpec> {
    Ok(SeriesSpec::AltOverN { term, p })
}

fn known(name: &str) -> Result<cf::ConstExpr> {
    cf::rhs_known(name, None)
}

/// Every verifiable identity, sorted by id.
pub fn registry() -> Vec<IdentityRecord> {
    let mut out = vec![
        rec(
            "thm1.1-quadratic",
            "sum H_n H_n^(2)/(n+k) (-1)^{n+k} in zeta values, ln 2 and star sums of depth <= 3",
            "−5/16 ζ(4) − 1/4 ζ(2) ln²2",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "rhs_thm11(quadratic, k)",
            |p| Ok(SeriesSpec::AltShifted { term: Family::Quadratic.term(), k: p.int("k")? }),
            |p| cf::rhs_thm11(Family::Quadratic, p.int("k")?),
        ),
        rec(
            "thm1.1-cubic",
            "sum H_n^3/(n+k) (-1)^{n+k} in zeta values, ln 2 and star sums of depth <= 4",
            "−5/16 ζ(4) + 9/8 ζ(3) ln 2",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "rhs_thm11(cubic, k)",
            |p| Ok(SeriesSpec::AltShifted { term: Family::Cubic.term(), k: p.int("k")? }),
            |p| cf::rhs_thm11(Family::Cubic, p.int("k")?),
        ),
        rec(
            "thm1.2-q-p0",
            "sum (-1)^{n+1} H_n H_n^(2)/C(n+k,k) reduced to shifted sums",
            "W̄_k(1,2;0) = Σ (−1)^{r+1} r",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "wbar_reduced_expr(quadratic, 0, k)",
            |p| Ok(SeriesSpec::WbarAlt { orders: vec![1, 2], p: 0, k: p.int("k")? }),
            |p| crate::reductions::wbar_reduced_expr(Family::Quadratic, 0, p.int("k")?),
        ),
        rec(
            "thm1.2-q-p1",
            "sum (-1)^{n+1} H_n H_n^(2)/(n C(n+k,k)) reduced to shifted sums",
            "W̄_k(1,2;0) = Σ (−1)^{r+1} r",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "wbar_reduced_expr(quadratic, 1, k)",
            |p| Ok(SeriesSpec::WbarAlt { orders: vec![1, 2], p: 1, k: p.int("k")? }),
            |p| crate::reductions::wbar_reduced_expr(Family::Quadratic, 1, p.int("k")?),
        ),
        rec(
            "thm1.2-c-p0",
            "sum (-1)^{n+1} H_n^3/C(n+k,k) reduced to shifted sums",
            "W̄_k(1,2;0) = Σ (−1)^{r+1} r",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "wbar_reduced_expr(cubic, 0, k)",
            |p| Ok(SeriesSpec::WbarAlt { orders: vec![1, 1, 1], p: 0, k: p.int("k")? }),
            |p| crate::reductions::wbar_reduced_expr(Family::Cubic, 0, p.int("k")?),
        ),
        rec(
            "thm1.2-c-p1",
            "sum (-1)^{n+1} H_n^3/(n C(n+k,k)) reduced to shifted sums",
            "W̄_k(1,2;0) = Σ (−1)^{r+1} r",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "wbar_reduced_expr(cubic, 1, k)",
            |p| Ok(SeriesSpec::WbarAlt { orders: vec![1, 1, 1], p: 1, k: p.int("k")? }),
            |p| crate::reductions::wbar_reduced_expr(Family::Cubic, 1, p.int("k")?),
        ),
        rec(
            "eq3.1",
            "Stirling-number generating series shifted by k, in weighted star sums",
            "s(n+1,m+1)",
            Params::grid(&[("m", ints(1, 4)), ("k", ints(1, 4)), ("x", samples_and_minus_one())]),
            "m in 1..4, k in 1..4, x in {-1, ±1/3, ±1/2, ±9/10}",
            Fast,
            "rhs_lemma21(m, k, x)",
            |p| Ok(SeriesSpec::Lemma21LHS { m: p.int("m")?, k: p.int("k")?, x: p.rat("x")? }),
            |p| cf::rhs_lemma21(p.int("m")?, p.int("k")?, &p.rat("x")?),
        ),
        rec(
            "eq3.3",
            "sum H_n^(m)/(n+k) x^{n+k} in polylogarithms and weighted star sums",
            "Σ H_n^(m)/(n+k) x^{n+k}",
            Params::grid(&[("m", ints(1, 4)), ("k", ints(1, 4)), ("x", samples_and_minus_one())]),
            "m in 1..4, k in 1..4, x in {-1, ±1/3, ±1/2, ±9/10}",
            Fast,
            "rhs_lemma22(m, k, x)",
            |p| Ok(SeriesSpec::Lemma22LHS { m: p.int("m")?, k: p.int("k")?, x: p.rat("x")? }),
            |p| cf::rhs_lemma22(p.int("m")?, p.int("k")?, &p.rat("x")?),
        ),
        rec(
            "eq3.5",
            "int_0^1 t^{n-1} ln^k(1-t) dt as a Bell polynomial in harmonic numbers",
            "(−1)^k Y_k(n)/n",
            Params::grid(&[("n", ints(1, 6)), ("k", ints(0, 4))]),
            "n in 1..6, k in 0..4",
            Fast,
            "rhs_beta(n, k)",
            |p| Ok(SeriesSpec::IntBeta { n: p.int("n")?, kpow: p.int("k")? }),
            |p| cf::rhs_beta(p.int("n")?, p.int("k")?),
        ),
        rec(
            "eq3.7",
            "sum H_n H_n^(m) x^n through sum H_n/n^m x^n and a nested sum",
            "1/(1−x) { Σ H_n/n^m x^n …",
            Params::grid(&[("m", ints(2, 4)), ("x", samples())]),
            "m in 2..4, x in {±1/3, ±1/2, ±9/10}",
            Fast,
            "rhs_lemma24(m, x)",
            |p| Ok(SeriesSpec::Lemma24LHS { m: p.int("m")?, x: p.rat("x")? }),
            |p| cf::rhs_lemma24(p.int("m")?, &p.rat("x")?),
        ),
        rec(
            "eq3.8",
            "sum H_n H_n^(2) x^n through polylogarithms and sum H_n/n^2 x^n",
            "2Li_3(x) − ln(1−x)Li_2(x)",
            Params::grid(&[("x", samples())]),
            "x in {±1/3, ±1/2, ±9/10}",
            Fast,
            "rhs_thm25(x)",
            |p| Ok(SeriesSpec::Thm25LHS { x: p.rat("x")? }),
            |p| cf::rhs_thm25(&p.rat("x")?),
        ),
        rec(
            "eq3.9",
            "the two nested polylogarithmic sums add up to Li_p(x) Li_m(y) + Li_{p+m}(xy)",
            "a simple reflection formula",
            reflection_domain(),
            "(p,m) in {(1,2),(2,2),(1,3)}, (x,y) in {(1/2,1/2),(-1/2,1/2),(1/3,-1/2)}",
            Fast,
            "rhs_reflection(p, m, x, y)",
            |p| {
                Ok(SeriesSpec::Reflection { p: p.int("p")?, m: p.int("m")?, x: p.rat("x")?, y: p.rat("y")? })
            },
            |p| cf::rhs_reflection(p.int("p")?, p.int("m")?, &p.rat("x")?, &p.rat("y")?),
        ),
        rec(
            "eq3.13",
            "int_0^z ln^m(1+x)/x dx in polylogarithms at 1/(1+z)",
            "1/(m+1) ln^{m+1}(1+z)",
            Params::grid(&[("m", ints(1, 4)), ("z", rats(&[(1, 2), (1, 1)]))]),
            "m in 1..4, z in {1/2, 1}",
            Fast,
            "rhs_thm26(m, z)",
            |p| Ok(SeriesSpec::IntLn1px { m: p.int("m")?, z: p.rat("z")? }),
            |p| cf::rhs_thm26(p.int("m")?, &p.rat("z")?),
        ),
        rec(
            "eq3.13-m3-z1",
            "int_0^1 ln^3(1+x)/x dx",
            "6ζ(4) + 3/2 ζ(2) ln²2",
            single(),
            "none",
            Fast,
            "rhs_known(int_ln3_1px)",
            |_| Ok(SeriesSpec::IntLn1px { m: 3, z: Rational::from(1) }),
            |_| known("int_ln3_1px"),
        ),
        rec(
            "eq3.13-m4-z1",
            "int_0^1 ln^4(1+x)/x dx",
            "−24 Li_5(1/2)",
            single(),
            "none",
            Fast,
            "rhs_known(int_ln4_1px)",
            |_| Ok(SeriesSpec::IntLn1px { m: 4, z: Rational::from(1) }),
            |_| known("int_ln4_1px"),
        ),
        rec(
            "eq3.17",
            "sum Y_m(n)/n (-1)^{n-1} = m! Li_{m+1}(1/2)",
            "m! Li_{m+1}(1/2)",
            Params::grid(&[("m", ints(1, 5))]),
            "m in 1..5",
            AlternatingSlow,
            "rhs_known(thm27, m)",
            |p| alt_over_n(TermKind::bell(p.int("m")?, false), 1),
            |p| cf::rhs_known("thm27", Some(p.int("m")?)),
        ),
        rec(
            "eq3.18",
            "int_0^1 ln^m(1-x)/(1+x) dx = (-1)^m m! Li_{m+1}(1/2)",
            "∫_0^1 ln^m(1−x)/(1+x) dx",
            Params::grid(&[("m", ints(1, 4))]),
            "m in 1..4",
            Fast,
            "rhs_known(int_ln_1mx_over_1px, m)",
            |p| Ok(SeriesSpec::IntLn1mxOver1px { m: p.int("m")? }),
            |p| cf::rhs_known("int_ln_1mx_over_1px", Some(p.int("m")?)),
        ),
        rec(
            "eq3.20",
            "sum H_n^3/n (-1)^{n-1}",
            "5/8 ζ(4)",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor28_h3)",
            |_| alt_over_n(TermKind::product(&[(1, 3)]), 1),
            |_| known("cor28_h3"),
        ),
        rec(
            "eq3.21",
            "sum H_n H_n^(2)/n (-1)^{n-1}",
            "2 Li_4(1/2) + 1/12 ln⁴2",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor28_hh2)",
            |_| alt_over_n(TermKind::product(&[(1, 1), (2, 1)]), 1),
            |_| known("cor28_hh2"),
        ),
        rec(
            "eq3.22",
            "sum (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3))/n (-1)^{n-1}",
            "∫_0^1 ln³(1+x)/x dx − 1/4 ln⁴2",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor28_y3)",
            |_| alt_over_n(TermKind::bell(3, true), 1),
            |_| known("cor28_y3"),
        ),
        rec(
            "eq3.23",
            "sum (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3))/n (-1)^{n-1}",
            "6 Li_4(1/2)",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor28_y3plus)",
            |_| alt_over_n(TermKind::bell(3, false), 1),
            |_| known("cor28_y3plus"),
        ),
        rec(
            "eq3.24",
            "sum 1/n^3 sum_{j<=n} (-1)^{j-1}/j",
            "7/4 ζ(3) ln 2 − 5/16 ζ(4)",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(nested_eta3)",
            |_| Ok(SeriesSpec::NestedEta { p: 3 }),
            |_| known("nested_eta3"),
        ),
        rec(
            "eq3.25",
            "sum H_n^(3)/n (-1)^{n-1}",
            "19/16 ζ(4) − 3/4 ζ(3) ln 2",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(alt_h3_n)",
            |_| alt_over_n(TermKind::product(&[(3, 1)]), 1),
            |_| known("alt_h3_n"),
        ),
        rec(
            "eq3.26",
            "sum (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3))/(n+k) (-1)^{n+k}",
            "1/4 ln⁴2 − 6ζ_{k−1}^⋆",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "rhs_cor29(y3_combo, k)",
            |p| Ok(SeriesSpec::AltShifted { term: TermKind::bell(3, true), k: p.int("k")? }),
            |p| cf::rhs_cor29(Cor29::Y3Combo, p.int("k")?),
        ),
        rec(
            "eq3.27",
            "sum H_n^(3)/(n+k) (-1)^{n+k}",
            "−5/16 ζ(4) + 3/4 ζ(3) ln 2",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "rhs_cor29(h3_order, k)",
            |p| Ok(SeriesSpec::AltShifted { term: TermKind::product(&[(3, 1)]), k: p.int("k")? }),
            |p| cf::rhs_cor29(Cor29::H3Order, p.int("k")?),
        ),
        rec(
            "eq4.2",
            "int_0^x t^{n-1} ln(1-t) dt in closed form",
            "x^n ln(1−x) − Σ x^j/j",
            Params::grid(&[("n", ints(1, 10)), ("x", rats(&[(-1, 1), (-1, 2), (1, 2)]))]),
            "n in 1..10, x in {-1, -1/2, 1/2}",
            Fast,
            "rhs_eq42(n, x)",
            |p| Ok(SeriesSpec::IntLn1mPartial { n: p.int("n")?, x: p.rat("x")? }),
            |p| cf::rhs_eq42(p.int("n")?, &p.rat("x")?),
        ),
        rec(
            "eq4.4",
            "sum_{i<k} sum_n H_n/(n^2 (n+i)) (-1)^{n+i}; the last printed term corrected from zsk(k-1;-2) to zsk(k-1;2)",
            "−5/8 ζ(3) ζ_{k−1}^⋆(1̄)",
            k_range(),
            "k in 1..6",
            AlternatingSlow,
            "rhs_shifted_over_square(k)",
            |p| Ok(SeriesSpec::ShiftedOverSquare { k: p.int("k")? }),
            |p| cf::rhs_shifted_over_square(p.int("k")?),
        ),
        rec(
            "sec3-alt-h-n3",
            "sum H_n/n^3 (-1)^{n-1}",
            "−2Li_4(1/2) + 11/4 ζ(4)",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(alt_h_n3)",
            |_| alt_over_n(TermKind::product(&[(1, 1)]), 3),
            |_| known("alt_h_n3"),
        ),
        rec(
            "cor3.1-cubic",
            "sum H_n^3/(n+2) (-1)^n, literal transcription of the k = 2 case",
            "Taking k=2 in Theorem 1.1",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor31_cubic)",
            |_| Ok(SeriesSpec::AltShifted { term: Family::Cubic.term(), k: 2 }),
            |_| known("cor31_cubic"),
        ),
        rec(
            "cor3.1-quadratic",
            "sum H_n H_n^(2)/(n+2) (-1)^n, literal transcription of the k = 2 case",
            "Taking k=2 in Theorem 1.1",
            single(),
            "none",
            AlternatingSlow,
            "rhs_known(cor31_quadratic)",
            |_| Ok(SeriesSpec::AltShifted { term: Family::Quadratic.term(), k: 2 }),
            |_| known("cor31_quadratic"),
        ),
        rec(
            "intro-w7",
            "sum H_n^3/n^4 (weight 7)",
            "231/16 ζ(7)",
            single(),
            "none",
            AlgebraicSlow,
            "rhs_known(intro_w7)",
            |_| Ok(SeriesSpec::PlainOverN { term: TermKind::product(&[(1, 3)]), p: 4 }),
            |_| known("intro_w7"),
        ),
        rec(
            "intro-w9a",
            "sum (H_n^(2))^2/n^5 (weight 9)",
            "−1069/36 ζ(9)",
            single(),
            "none",
            AlgebraicSlow,
            "rhs_known(intro_w9a)",
            |_| Ok(SeriesSpec::PlainOverN { term: TermKind::product(&[(2, 2)]), p: 5 }),
            |_| known("intro_w9a"),
        ),
        rec(
            "intro-w9b",
            "sum (H_n^(2))^2 H_n^(3)/n^2 (weight 9)",
            "−617/72 ζ(9)",
            single(),
            "none",
            AlgebraicSlow,
            "rhs_known(intro_w9b)",
            |_| Ok(SeriesSpec::PlainOverN { term: TermKind::product(&[(2, 2), (3, 1)]), p: 2 }),
            |_| known("intro_w9b"),
        ),
        rec(
            "intro-binomial",
            "sum H_n H_n^(2)/(n C(n+k,k)), no sign",
            "2ζ(4) + 2ζ(3)H_{r−1}",
            Params::grid(&[("k", ints(1, 4))]),
            "k in 1..4",
            AlgebraicSlow,
            "rhs_nonalt_binomial(k)",
            |p| Ok(SeriesSpec::WbarPlain { orders: vec![1, 2], p: 1, k: p.int("k")? }),
            |p| cf::rhs_nonalt_binomial(p.int("k")?),
        ),
    ];
    for r in &mut out {
        if r.id.starts_with("intro-") {
            r.external_source = true;
        }
    }
    out.sort_by_key(|r| r.id);
    out
}

fn reflection_domain() -> Vec<Params> {
    let mut out = Vec::new();
    for (p, m) in [(1, 2), (2, 2), (1, 3)] {
        for (x, y) in [((1, 2), (1, 2)), ((-1, 2), (1, 2)), ((1, 3), (-1, 2))] {
            out.push(
                Params::new()
                    .with("p", p)
                    .with("m", m)
                    .with("x", Rational::from(x))
                    .with("y", Rational::from(y)),
            );
        }
    }
    out
}
