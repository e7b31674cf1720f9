//! Evaluates series and integrals described as JSON specs, the same input
//! the `eval` subcommand accepts.

use altsums::numerics::{format_sig, sci, PrecisionConfig};
use altsums::reductions::{eval_series, SeriesSpec};

const SPECS: &[&str] = &[
    r#"{"kind":"AltOverN","p":1,"term":[[1,3]]}"#,
    r#"{"kind":"AltOverN","p":3,"term":[[1,1]]}"#,
    r#"{"kind":"AltShifted","k":2,"term":[[1,1],[2,1]]}"#,
];

fn main() -> altsums::Result<()> {
    let cfg = PrecisionConfig::new(30);
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs: Vec<&str> = if args.is_empty() {
        SPECS.to_vec()
    } else {
        args.iter().map(String::as_str).collect()
    };
    for text in inputs {
        let spec = SeriesSpec::from_json(text)?;
        let v = eval_series(&spec, &cfg)?;
        println!(
            "{}\n  = {}  ±{}  [{}]",
            spec.to_json(),
            format_sig(&v.value, 30),
            sci(&v.error_bound, 2),
            v.method
        );
    }
    Ok(())
}
