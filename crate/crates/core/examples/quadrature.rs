//! Tanh-sinh quadrature with logarithmic endpoint behaviour, checked
//! against closed forms.

use altsums::closedform::{eval_expr, rhs_known};
use altsums::numerics::{format_sig, quad_de, sci, PrecisionConfig};
use rug::Float;

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(40);
    let bits = cfg.bits();
    let zero = cfg.zero();
    let one = cfg.float(1);

    // ∫_0^1 ln³(1+x)/x dx
    let v = quad_de(|x| Float::with_val(bits, x.ln_1p_ref()).pow_3() / x, &zero, &one, &cfg)?;
    let exact = eval_expr(&rhs_known("int_ln3_1px", None)?, &cfg)?;
    println!(
        "∫ ln³(1+x)/x   = {}  (error {})",
        format_sig(&v.value, 40),
        sci(&Float::with_val(bits, &v.value - &exact), 2)
    );

    // ∫_0^1 ln²(1-x)/(1+x) dx = 2 Li_3(1/2)
    let v = quad_de(
        |x| {
            // Keep the abscissa precision so 1 - x stays resolved near x = 1.
            let l = Float::with_val(x.prec(), -x).ln_1p();
            Float::with_val(bits, l.square() / Float::with_val(bits, x + 1u32))
        },
        &zero,
        &one,
        &cfg,
    )?;
    let exact = eval_expr(&rhs_known("int_ln_1mx_over_1px", Some(2))?, &cfg)?;
    println!(
        "∫ ln²(1-x)/(1+x) = {}  (error {})",
        format_sig(&v.value, 40),
        sci(&Float::with_val(bits, &v.value - &exact), 2)
    );
    Ok(())
}

trait Cube {
    fn pow_3(self) -> Float;
}

impl Cube for Float {
    fn pow_3(self) -> Float {
        let sq = Float::with_val(self.prec(), self.square_ref());
        sq * self
    }
}
