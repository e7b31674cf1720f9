//! Convergence acceleration of alternating series: ln 2, eta(3) and the
//! harmonic sum Σ (-1)^{n-1} H_n / n = ζ(2)/2 - ln²2/2.

use altsums::numerics::{accelerate_alternating, format_sig, ln2, sci, zeta_int, HarmonicStream, PrecisionConfig};
use rug::Float;

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(50);
    let bits = cfg.bits();
    println!("acceleration order {}", cfg.acceleration_order);

    let v = accelerate_alternating(|n| Ok(Float::with_val(bits, n).recip()), &cfg)?;
    let err = Float::with_val(bits, &v.value - ln2(&cfg)?);
    println!(
        "ln 2    ~ {}  (error {}, estimate {})",
        format_sig(&v.value, 50),
        sci(&err, 2),
        sci(&v.error_bound, 2)
    );

    let v = accelerate_alternating(|n| Ok(Float::with_val(bits, n * n * n).recip()), &cfg)?;
    println!("eta(3)  ~ {}", format_sig(&v.value, 50));

    let mut stream = HarmonicStream::new(1, bits);
    let v = accelerate_alternating(
        |n| {
            while stream.n() < n {
                stream.advance();
            }
            Ok(Float::with_val(bits, stream.get(1) / n))
        },
        &cfg,
    )?;
    let l = ln2(&cfg)?;
    let exact = Float::with_val(bits, zeta_int(2, &cfg)? - Float::with_val(bits, &l * &l)) / 2u32;
    let err = Float::with_val(bits, &v.value - &exact);
    println!(
        "Σ(-1)^(n-1) H_n/n ~ {}  (error {})",
        format_sig(&v.value, 50),
        sci(&err, 2)
    );
    Ok(())
}
