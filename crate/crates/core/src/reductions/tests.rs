use rug::{Float, Rational};

use super::*;
use crate::closedform::{self as cf, eval_expr, Family};
use crate::numerics::PrecisionConfig;

fn close(a: &Float, b: &Float, digits: i32) -> bool {
    let d = Float::with_val(a.prec(), a - b).abs();
    d < pow(digits)
}

fn pow(digits: i32) -> Float {
    crate::numerics::pow10(-digits, 256)
}

fn parse(s: &str, cfg: &PrecisionConfig) -> Float {
    Float::with_val(cfg.bits(), Float::parse(s).unwrap())
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn rhs(e: crate::Result<cf::ConstExpr>, cfg: &PrecisionConfig) -> Float {
    eval_expr(&e.unwrap(), cfg).unwrap()
}

#[test]
fn alternating_cubic_over_n_matches_oracle() {
    let cfg = PrecisionConfig::new(30);
    let spec = SeriesSpec::AltOverN {
        term: TermKind::product(&[(1, 3)]),
        p: 1,
    };
    let v = eval_series(&spec, &cfg).unwrap();
    let oracle = parse("0.2741257465492529706788330367875047076266", &cfg);
    assert!(close(&v.value, &oracle, 30), "{}", v.value);
}

#[test]
fn beta_integral_is_rational() {
    let cfg = PrecisionConfig::new(30);
    let v = eval_series(&SeriesSpec::IntBeta { n: 3, kpow: 2 }, &cfg).unwrap();
    let exact = Float::with_val(cfg.bits(), &r(170, 108));
    assert!(close(&v.value, &exact, 30), "{}", v.value);
}

#[test]
fn empty_partial_sum_is_zero() {
    let cfg = PrecisionConfig::new(20);
    let spec = SeriesSpec::AltShifted {
        term: TermKind::product(&[(1, 3)]),
        k: 2,
    };
    assert!(partial_sum(&spec, 0, &cfg).unwrap().is_zero());
    assert!(partial_sum(&SeriesSpec::NestedEta { p: 3 }, 3, &cfg).is_err());
}

#[test]
fn shifted_first_index_matches_oracle() {
    // sum H_n^3/(n+1) (-1)^{n+1}; the same value as the direct W_1({1}_3; 0).
    let cfg = PrecisionConfig::new(30);
    let spec = SeriesSpec::AltShifted {
        term: TermKind::product(&[(1, 3)]),
        k: 1,
    };
    let a = eval_series(&spec, &cfg).unwrap().value;
    let b = wbar_direct(&[1, 1, 1], 0, 1, &cfg).unwrap().value;
    assert!(close(&a, &b, 30));
    assert!(close(&a, &rhs(cf::rhs_thm11(Family::Cubic, 1), &cfg), 30));
}

#[test]
fn wbar_acceleration_agrees_with_plain_summation() {
    let cfg = PrecisionConfig::new(30);
    let oracle = parse("0.3420140195059117935691050569963476228789", &cfg);
    let fast = wbar_direct(&[1], 1, 1, &cfg).unwrap();
    assert!(close(&fast.value, &oracle, 30));
    let slow = wbar_direct_summed(&[1], 1, 1, 20_000, &cfg).unwrap();
    let diff = Float::with_val(cfg.bits(), &slow.value - &fast.value).abs();
    assert!(diff <= slow.error_bound, "{diff} vs {}", slow.error_bound);
}

#[test]
fn wbar_reduction_small_cases() {
    let cfg = PrecisionConfig::new(30);
    // k = 1 has a single shifted sum.
    let one = wbar_reduced(Family::Cubic, 0, 1, &cfg).unwrap();
    assert!(close(&one, &rhs(cf::rhs_thm11(Family::Cubic, 1), &cfg), 30));
    let q11 = wbar_reduced(Family::Quadratic, 1, 1, &cfg).unwrap();
    let expected = rhs(cf::rhs_known("cor28_hh2", None), &cfg) - rhs(cf::rhs_thm11(Family::Quadratic, 1), &cfg);
    assert!(close(&q11, &expected, 30));
    for (family, p, k) in [
        (Family::Cubic, 1, 3),
        (Family::Quadratic, 0, 2),
        (Family::Quadratic, 1, 4),
    ] {
        let direct = wbar_direct(&family.orders(), p, k, &cfg).unwrap().value;
        let reduced = wbar_reduced(family, p, k, &cfg).unwrap();
        assert!(close(&direct, &reduced, 28), "{family} p={p} k={k}");
    }
    assert!(wbar_reduced(Family::Cubic, 0, 0, &cfg).is_err());
    assert!(wbar_direct(&[1], 2, 1, &cfg).is_err());
}

#[test]
fn power_series_identities() {
    let cfg = PrecisionConfig::new(30);
    let x = r(1, 3);
    let lemma24 = eval_series(&SeriesSpec::Lemma24LHS { m: 2, x: x.clone() }, &cfg)
        .unwrap()
        .value;
    let oracle = parse("0.6922319529862238676442336417014297367343", &cfg);
    assert!(close(&lemma24, &oracle, 30));
    assert!(close(&lemma24, &rhs(cf::rhs_thm25(&x), &cfg), 30));
    assert!(close(&lemma24, &rhs(cf::rhs_lemma24(2, &x), &cfg), 30));
    for m in 1..=3 {
        for k in 1..=3 {
            for x in [r(-1, 1), r(-1, 2), r(9, 10), r(1, 3)] {
                let l21 = eval_series(&SeriesSpec::Lemma21LHS { m, k, x: x.clone() }, &cfg)
                    .unwrap()
                    .value;
                assert!(
                    close(&l21, &rhs(cf::rhs_lemma21(m, k, &x), &cfg), 28),
                    "3.1 m={m} k={k} x={x}"
                );
                let l22 = eval_series(&SeriesSpec::Lemma22LHS { m, k, x: x.clone() }, &cfg)
                    .unwrap()
                    .value;
                assert!(
                    close(&l22, &rhs(cf::rhs_lemma22(m, k, &x), &cfg), 28),
                    "3.3 m={m} k={k} x={x}"
                );
            }
        }
    }
}

#[test]
fn reflection_pairs() {
    let cfg = PrecisionConfig::new(30);
    for (p, m) in [(1, 2), (2, 2), (1, 3)] {
        for (x, y) in [(r(1, 2), r(1, 2)), (r(-1, 2), r(1, 2)), (r(1, 3), r(-1, 2))] {
            let spec = SeriesSpec::Reflection {
                p,
                m,
                x: x.clone(),
                y: y.clone(),
            };
            let lhs = eval_series(&spec, &cfg).unwrap().value;
            assert!(
                close(&lhs, &rhs(cf::rhs_reflection(p, m, &x, &y), &cfg), 30),
                "p={p} m={m}"
            );
        }
    }
}

#[test]
fn integrals() {
    let cfg = PrecisionConfig::new(30);
    let v = eval_series(&SeriesSpec::IntLn1mxOver1px { m: 2 }, &cfg).unwrap().value;
    let oracle = parse("1.074426387216080401881246451189931653341", &cfg);
    assert!(close(&v, &oracle, 30));
    assert!(close(&v, &rhs(cf::rhs_known("int_ln_1mx_over_1px", Some(2)), &cfg), 30));
    for (m, z) in [(1, r(1, 2)), (3, r(1, 1)), (2, r(1, 3))] {
        let lhs = eval_series(&SeriesSpec::IntLn1px { m, z: z.clone() }, &cfg)
            .unwrap()
            .value;
        assert!(close(&lhs, &rhs(cf::rhs_thm26(m, &z), &cfg), 30), "m={m} z={z}");
    }
    for (n, x) in [(1, r(1, 2)), (4, r(-1, 1)), (3, r(-1, 2))] {
        let lhs = eval_series(&SeriesSpec::IntLn1mPartial { n, x: x.clone() }, &cfg)
            .unwrap()
            .value;
        assert!(close(&lhs, &rhs(cf::rhs_eq42(n, &x), &cfg), 30), "n={n} x={x}");
    }
}

#[test]
fn bell_numerators_give_polylogs_at_one_half() {
    let cfg = PrecisionConfig::new(30);
    for m in 1..=4 {
        let spec = SeriesSpec::AltOverN {
            term: TermKind::bell(m, false),
            p: 1,
        };
        let lhs = eval_series(&spec, &cfg).unwrap().value;
        assert!(close(&lhs, &rhs(cf::rhs_known("thm27", Some(m)), &cfg), 30), "m={m}");
    }
}

#[test]
fn nested_sums() {
    let cfg = PrecisionConfig::new(30);
    let v = eval_series(&SeriesSpec::NestedEta { p: 3 }, &cfg).unwrap().value;
    let oracle = parse("1.119878107736230303681333271738615212198", &cfg);
    assert!(close(&v, &oracle, 30));
    // Nested{3, 1, 1, -1} = -NestedEta{3}.
    let n = SeriesSpec::Nested {
        outer_power: 3,
        outer_x: r(1, 1),
        inner_power: 1,
        inner_x: r(-1, 1),
    };
    let w = eval_series(&n, &cfg).unwrap().value;
    assert!(close(&w, &-v, 30));
    // sum H_n/n^3 (-1)^{n-1} as a nested sum at y = -1, x = 1, negated.
    let n = SeriesSpec::Nested {
        outer_power: 3,
        outer_x: r(-1, 1),
        inner_power: 1,
        inner_x: r(1, 1),
    };
    let w = eval_series(&n, &cfg).unwrap().value;
    assert!(close(&w, &-rhs(cf::rhs_known("alt_h_n3", None), &cfg), 30));
}

#[test]
fn shifted_over_square() {
    let cfg = PrecisionConfig::new(30);
    let zero = eval_series(&SeriesSpec::ShiftedOverSquare { k: 1 }, &cfg).unwrap();
    assert!(zero.value.is_zero());
    for k in 2..=4 {
        let lhs = eval_series(&SeriesSpec::ShiftedOverSquare { k }, &cfg).unwrap().value;
        assert!(close(&lhs, &rhs(cf::rhs_shifted_over_square(k), &cfg), 30), "k={k}");
        let printed = rhs(cf::rhs_shifted_over_square_printed(k), &cfg);
        assert!(!close(&lhs, &printed, 5), "k={k}");
    }
}

#[test]
fn slow_positive_series() {
    let cfg = PrecisionConfig::new(12);
    let (lhs, rhs_v) = nonalt_binomial_check(2, &cfg).unwrap();
    assert!(close(&lhs.value, &rhs_v, 10), "{} vs {rhs_v}", lhs.value);
    let oracle = parse("0.76053266110308781223253107006", &cfg);
    assert!(close(&rhs_v, &oracle, 25));
    let (_, one) = nonalt_binomial_check(1, &cfg).unwrap();
    let two_z4 = parse("2.16464646742227638303200739308", &cfg);
    assert!(close(&one, &two_z4, 25));
}

#[test]
fn domain_errors() {
    let cfg = PrecisionConfig::new(20);
    let bad = [
        SeriesSpec::AltShifted {
            term: TermKind::product(&[(1, 1)]),
            k: 0,
        },
        SeriesSpec::Lemma24LHS { m: 2, x: r(1, 1) },
        SeriesSpec::Thm25LHS { x: r(-1, 1) },
        SeriesSpec::IntLn1px { m: 1, z: r(2, 1) },
        SeriesSpec::PlainOverN {
            term: TermKind::product(&[(1, 1)]),
            p: 1,
        },
        SeriesSpec::NestedEta { p: 1 },
        SeriesSpec::WbarAlt {
            orders: vec![],
            p: 0,
            k: 1,
        },
    ];
    for spec in bad {
        assert!(
            matches!(eval_series(&spec, &cfg), Err(crate::Error::Domain(_))),
            "{spec}"
        );
    }
}

mod props {
    use super::*;
    use crate::numerics::accelerate_alternating;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        /// Splitting off the first term and reindexing gives the same value.
        #[test]
        fn shift_reindexing(k in 1u32..=6, cubic in any::<bool>()) {
            let cfg = PrecisionConfig::new(25);
            let term = if cubic { Family::Cubic.term() } else { Family::Quadratic.term() };
            let direct = eval_series(&SeriesSpec::AltShifted { term: term.clone(), k }, &cfg).unwrap().value;
            let bits = cfg.bits() + 32;
            let first = partial_sum(&SeriesSpec::AltShifted { term: term.clone(), k }, 1, &cfg).unwrap();
            let mut h = HarmonicStream::new(term.max_order(), bits);
            h.advance();
            let kk = u64::from(k);
            // sum_{n>=2} f(n)/(n+k) (-1)^{n+k} = (-1)^k sum_{i>=1} (-1)^{i-1} f(i+1)/(i+1+k)
            let rest = accelerate_alternating(|i| {
                h.advance();
                Ok(term_value(&term, &h, bits) / (i + 1 + kk))
            }, &cfg).unwrap().value;
            let rest = if k % 2 == 1 { -rest } else { rest };
            let total = Float::with_val(cfg.bits(), &first + &rest);
            prop_assert!(close(&direct, &total, 25));
        }
    }
}
