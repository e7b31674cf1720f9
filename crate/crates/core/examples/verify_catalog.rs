//! Runs every registered identity (or those matching the first argument,
//! e.g. `thm1.1-*` or `class=fast`) and prints a text report.

use altsums::catalog::{results_text, verify_all, Filter};
use altsums::numerics::PrecisionConfig;

fn main() -> altsums::Result<()> {
    let filter: Filter = std::env::args().nth(1).unwrap_or_default().parse()?;
    let cfg = PrecisionConfig::new(30);
    let results = verify_all(&filter, &cfg);
    print!("{}", results_text(&results));
    Ok(())
}
