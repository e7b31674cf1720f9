//! Alternating sums with reciprocal binomial weights: direct summation
//! against the reduced closed form, for k = 1..6.

use altsums::closedform::Family;
use altsums::numerics::{format_sig, sci, PrecisionConfig};
use altsums::reductions::{wbar_direct, wbar_reduced};
use rug::Float;

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(30);
    for family in Family::ALL {
        for p in 0..=1 {
            println!("{family}, p = {p}");
            for k in 1..=6 {
                let direct = wbar_direct(&family.orders(), p, k, &cfg)?;
                let reduced = wbar_reduced(family, p, k, &cfg)?;
                let diff = Float::with_val(cfg.bits(), &direct.value - &reduced);
                println!("  k={k}  {}  diff {}", format_sig(&reduced, 30), sci(&diff, 2));
            }
        }
    }
    Ok(())
}
