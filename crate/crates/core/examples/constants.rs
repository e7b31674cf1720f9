//! Zeta and eta values, ln 2 and polylogarithms at working precision.

use altsums::exact::Rational;
use altsums::numerics::{eta_int, format_sig, li_half, ln2, polylog_rational, zeta_int, PrecisionConfig};

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(40);
    let show = |name: &str, v: &altsums::numerics::BigFloat| println!("{name:>12} = {}", format_sig(v, 40));

    show("ln 2", &ln2(&cfg)?);
    for s in 2..=5 {
        show(&format!("zeta({s})"), &zeta_int(s, &cfg)?);
        show(&format!("eta({s})"), &eta_int(s, &cfg)?);
    }
    for p in 2..=5 {
        show(&format!("Li_{p}(1/2)"), &li_half(p, &cfg)?);
    }
    show("Li_3(-1/3)", &polylog_rational(3, &Rational::from((-1, 3)), &cfg)?);
    show("Li_2(9/10)", &polylog_rational(2, &Rational::from((9, 10)), &cfg)?);
    Ok(())
}
