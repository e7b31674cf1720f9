//! Slowly converging positive series summed with a fitted remainder model:
//! Σ H_n/n² = 2ζ(3) and Σ 1/n² = ζ(2).

use altsums::numerics::{sci, sum_with_tail, zeta_int, HarmonicStream, PrecisionConfig, TailModel};
use rug::Float;

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(25);
    let bits = cfg.bits();

    let v = sum_with_tail(|n| Ok(Float::with_val(bits, n * n).recip()), TailModel::new(0, 2), &cfg)?;
    let err = Float::with_val(bits, &v.value - zeta_int(2, &cfg)?);
    println!("Σ 1/n²     error {}  estimate {}", sci(&err, 2), sci(&v.error_bound, 2));

    let mut stream = HarmonicStream::new(1, bits);
    let v = sum_with_tail(
        |n| {
            stream.advance();
            debug_assert_eq!(stream.n(), n);
            Ok(Float::with_val(bits, stream.get(1) / Float::with_val(bits, n * n)))
        },
        TailModel::new(1, 2),
        &cfg,
    )?;
    let exact = Float::with_val(bits, zeta_int(3, &cfg)? * 2u32);
    let err = Float::with_val(bits, &v.value - &exact);
    println!(
        "Σ H_n/n²   error {}  estimate {}  ({})",
        sci(&err, 2),
        sci(&v.error_bound, 2),
        v.method
    );
    Ok(())
}
