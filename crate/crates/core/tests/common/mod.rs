#![allow(dead_code)]

use std::io::Write;

use altsums::numerics::{sci, BigFloat, PrecisionConfig};
use rug::Float;

/// `10^-digits` at a comfortable precision.
pub fn tenth_power(digits: u32) -> Float {
    let bits = (f64::from(digits) * std::f64::consts::LOG2_10) as u32 + 64;
    Float::with_val(bits, Float::parse(format!("1e-{digits}")).unwrap())
}

pub fn below(x: &Float, digits: u32) -> bool {
    x.is_finite() && x.clone().abs() < tenth_power(digits)
}

pub fn diff(a: &Float, b: &Float) -> Float {
    Float::with_val(a.prec().max(b.prec()), a - b).abs()
}

/// Parses a decimal oracle string at the working precision of `cfg`.
pub fn oracle(text: &str, cfg: &PrecisionConfig) -> BigFloat {
    Float::with_val(cfg.bits(), Float::parse(text).unwrap())
}

pub fn fmt(x: &Float) -> String {
    sci(x, 3)
}

/// Writes straight to the process stdout so the line shows up even when
/// the harness captures `println!` output.
pub fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

pub fn run_cli(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_altsums"))
        .args(args)
        .env_remove("ALTSUMS_DIGITS")
        .env_remove("ALTSUMS_WORKERS")
        .output()
        .expect("the altsums binary runs")
}
