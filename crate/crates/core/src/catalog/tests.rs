use super::*;
use crate::numerics::PrecisionConfig;

#[test]
fn registry_contract() {
    let reg = registry();
    assert!(reg.len() >= 28, "{}", reg.len());
    let mut ids: Vec<&str> = reg.iter().map(|r| r.id).collect();
    ids.dedup();
    assert_eq!(ids.len(), reg.len(), "ids are unique and sorted");
    for r in &reg {
        assert!(!r.domain.is_empty(), "{}", r.id);
        assert!(!r.paper_ref.is_empty(), "{}", r.id);
        for p in &r.domain {
            r.lhs_spec(p).unwrap_or_else(|e| panic!("{} {p}: {e}", r.id));
            r.rhs_expr(p).unwrap_or_else(|e| panic!("{} {p}: {e}", r.id));
        }
    }
    let m: Vec<u32> = find("eq3.17")
        .unwrap()
        .domain
        .iter()
        .map(|p| p.int("m").unwrap())
        .collect();
    assert_eq!(m, vec![1, 2, 3, 4, 5]);
    assert!(find("thm1.1-cubic").is_ok());
}

#[test]
fn verify_examples() {
    let cfg = PrecisionConfig::new(30);
    let k1 = Params::new().with("k", 1);
    let r = verify("thm1.1-cubic", &k1, &cfg).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.abs_diff.unwrap() < crate::numerics::pow10(-30, 128));
    assert!(verify("eq3.20", &Params::new(), &cfg).unwrap().pass);
    let refl = "p=1,m=2,x=1/2,y=1/2".parse().unwrap();
    assert!(verify("eq3.9", &refl, &cfg).unwrap().pass);
}

#[test]
fn verify_errors() {
    let cfg = PrecisionConfig::new(20);
    assert!(matches!(
        verify("nosuch", &Params::new(), &cfg),
        Err(Error::UnknownIdentity(_))
    ));
    let k9 = Params::new().with("k", 9);
    assert!(matches!(
        verify("thm1.1-cubic", &k9, &cfg),
        Err(Error::ParamOutOfDomain { .. })
    ));
}

#[test]
fn convergence_failure_is_a_result() {
    // Too few terms for the power series at x = 9/10: the instance fails
    // instead of erroring.
    let cfg = PrecisionConfig::new(20).with_max_terms(120);
    let r = verify("eq3.8", &"x=9/10".parse().unwrap(), &cfg).unwrap();
    assert!(!r.pass);
    assert!(r.reason.is_some());
}

#[test]
fn filters() {
    assert_eq!("".parse::<Filter>().unwrap(), Filter::All);
    assert_eq!(
        "class=algebraic_slow".parse::<Filter>().unwrap(),
        Filter::Class(ConvergenceClass::AlgebraicSlow)
    );
    assert!("class=bogus".parse::<Filter>().is_err());
    let f: Filter = "thm1.2-*".parse().unwrap();
    assert_eq!(instances(&f).len(), 24);
    assert!(instances(&"nosuch".parse().unwrap()).is_empty());
}

#[test]
fn verify_all_is_ordered_and_deterministic() {
    let cfg = PrecisionConfig::new(25);
    let f: Filter = "eq3.2?".parse().unwrap();
    let a = verify_all(&f, &cfg);
    let b = verify_all(&f, &cfg);
    assert!(!a.is_empty());
    assert!(a.iter().all(|r| r.pass), "{:?}", a.iter().find(|r| !r.pass));
    let keys: Vec<(String, Params)> = a.iter().map(|r| (r.id.clone(), r.params.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.lhs_value, y.lhs_value);
        assert_eq!(x.rhs_value, y.rhs_value);
    }
    let json: serde_json::Value = serde_json::from_str(&results_json(&a, 25)).unwrap();
    assert_eq!(json["total"], a.len());
    assert!(results_csv(&a, 25).unwrap().lines().count() == a.len() + 1);
}

#[test]
fn tolerance_is_monotone() {
    let cfg = PrecisionConfig::new(30);
    let k2 = Params::new().with("k", 2);
    for tol in [30, 20, 10, 5] {
        assert!(verify_with("eq3.27", &k2, &cfg, Some(tol)).unwrap().pass, "tol={tol}");
    }
}
