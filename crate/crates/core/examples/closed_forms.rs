//! Closed-form expressions: parse the text grammar, combine symbolically,
//! evaluate, and print the canonical rendering.

use altsums::closedform::{eval_expr_with_error, parse_expr, rhs_thm11, Family};
use altsums::numerics::{format_sig, PrecisionConfig};

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(30);

    let a = parse_expr("5/8*zeta(4) + 3/4*zeta(2)*ln2^2 - 1/4*ln2^4 - 9/8*zeta(3)*ln2")?;
    let b = parse_expr("(zeta(2) - ln2^2)/2")?;
    for e in [&a, &b, &(a.clone() - b.clone())] {
        let v = eval_expr_with_error(e, &cfg)?;
        println!("{e}\n  = {}", format_sig(&v.value, 30));
    }

    // Star-sum atoms survive rendering and reparsing.
    let general = rhs_thm11(Family::Cubic, 3)?;
    println!("\nshifted cubic sum, k = 3:\n  {general}");
    assert_eq!(parse_expr(&general.to_string())?, general);
    println!("  = {}", format_sig(&eval_expr_with_error(&general, &cfg)?.value, 30));
    Ok(())
}
