//! The `altsums` command line: `eval`, `verify`, `table` and `list`.
//!
//! Exit codes: 0 when everything requested succeeded (and every identity
//! passed), 1 on a verification or convergence failure, 2 on usage and
//! parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use rug::Float;
use serde_json::json;

use crate::catalog::{self, Filter, Params};
use crate::closedform::{eval_expr_with_error, parse_expr, Family};
use crate::error::{Error, Result};
use crate::numerics::{format_sig, pow10, sci, PrecisionConfig, ValueWithError};
use crate::reductions::{self, SeriesSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "altsums",
    version,
    about = "Evaluate alternating harmonic number sums and verify their closed forms"
)]
struct Cli {
    /// Target number of correct significant digits.
    #[arg(long, global = true, env = "ALTSUMS_DIGITS", default_value_t = 30)]
    digits: u32,

    /// Worker threads for verification and tables (default: all cores).
    #[arg(long, global = true, env = "ALTSUMS_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a series given as JSON (e.g. '{"kind":"AltOverN","term":[[1,3]],"p":1}')
    /// or a closed-form expression (e.g. 'zeta(3)*ln2 - 1/4*Li(4;1/2)').
    Eval {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify registered identities over their parameter domains.
    Verify {
        /// Id glob (e.g. 'thm1.1-*') or 'class=<fast|alternating_slow|algebraic_slow>'.
        #[arg(long, default_value = "")]
        filter: String,
        /// Restrict to instances with these parameter values, e.g. 'k=2,x=1/2'.
        #[arg(long)]
        param: Option<String>,
        /// Required agreement in digits (capped by each record's default).
        #[arg(long, default_value_t = 25)]
        tolerance: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Tabulate the reciprocal-binomial sums, direct and reduced.
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        p: u32,
        /// Inclusive range such as '1..6', or a single k.
        #[arg(long, default_value = "1..6")]
        k: String,
        #[arg(long, default_value_t = 25)]
        tolerance: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// List the registered identities.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Quadratic,
    Cubic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Quadratic => Family::Quadratic,
            FamilyArg::Cubic => Family::Cubic,
        }
    }
}

/// Outcome of a command: the text to emit and whether everything passed.
struct Output {
    body: String,
    ok: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ConvergenceFailure { .. } | Error::NonFinite(_) | Error::Io(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli) {
        Ok((output, path)) => {
            let written = match path {
                Some(p) => std::fs::write(&p, output.body.as_bytes()),
                None => out.write_all(output.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILURE;
            }
            if output.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn config(digits: u32) -> Result<PrecisionConfig> {
    if !(1..=2000).contains(&digits) {
        return Err(Error::domain(format!("digits must be in 1..=2000, got {digits}")));
    }
    let cfg = PrecisionConfig::new(digits);
    cfg.validate()?;
    Ok(cfg)
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        if w == 0 {
            return Err(Error::domain("workers must be at least 1"));
        }
        b = b.num_threads(w);
    }
    b.build()
        .map_err(|e| Error::domain(format!("cannot start workers: {e}")))
}

fn check_tolerance(digits: u32, tolerance: u32) -> Result<()> {
    if tolerance == 0 || digits < tolerance + 5 {
        return Err(Error::domain(format!(
            "--digits ({digits}) must be at least --tolerance ({tolerance}) + 5"
        )));
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<(Output, Option<std::path::PathBuf>)> {
    let cfg = config(cli.digits)?;
    match cli.command {
        Command::Eval { input, format } => Ok((cmd_eval(&input, &cfg, format)?, None)),
        Command::Verify {
            filter,
            param,
            tolerance,
            format,
            output,
        } => {
            check_tolerance(cli.digits, tolerance)?;
            let pool = pool(cli.workers)?;
            let out = pool.install(|| cmd_verify(&filter, param.as_deref(), tolerance, &cfg, format))?;
            Ok((out, output))
        }
        Command::Table {
            family,
            p,
            k,
            tolerance,
            format,
            output,
        } => {
            check_tolerance(cli.digits, tolerance)?;
            let pool = pool(cli.workers)?;
            let out = pool.install(|| cmd_table(family.into(), p, &k, tolerance, &cfg, format))?;
            Ok((out, output))
        }
        Command::List { format } => Ok((cmd_list(format)?, None)),
    }
}

fn cmd_eval(input: &str, cfg: &PrecisionConfig, format: Format) -> Result<Output> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let v: ValueWithError = if trimmed.starts_with('{') {
        let spec = SeriesSpec::from_json(trimmed).map_err(|e| match e {
            Error::Json(j) => Error::parse(j.column().saturating_sub(1), j.to_string()),
            other => other,
        })?;
        reductions::eval_series(&spec, cfg)?
    } else {
        let e = parse_expr(trimmed)?;
        eval_expr_with_error(&e, cfg)?.require("expression", cfg.target_digits)?
    };
    let digits = cfg.target_digits as usize;
    let body = match format {
        Format::Text => format!(
            "{}\nerror estimate: {}\nmethod: {}\n",
            format_sig(&v.value, digits),
            sci(&v.error_bound, 3),
            v.method
        ),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "input": trimmed,
                "digits": cfg.target_digits,
                "value": format_sig(&v.value, digits),
                "error_estimate": sci(&v.error_bound, 3),
                "method": v.method,
            }))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let row = [
                trimmed.to_string(),
                format_sig(&v.value, digits),
                sci(&v.error_bound, 3),
                v.method.clone(),
            ];
            w.write_record(["input", "value", "error_estimate", "method"])
                .and_then(|_| w.write_record(&row))
                .map_err(|e| Error::Io(std::io::Error::other(e)))?;
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("utf-8")
        }
    };
    Ok(Output { body, ok: true })
}

fn cmd_verify(
    filter: &str,
    param: Option<&str>,
    tolerance: u32,
    cfg: &PrecisionConfig,
    format: Format,
) -> Result<Output> {
    let filter: Filter = filter.parse()?;
    let restrict: Option<Params> = param.map(str::parse).transpose()?;
    let selected = catalog::instances(&filter);
    if selected.is_empty() {
        return Err(Error::UnknownIdentity(format!(
            "no identity matches `{}`",
            filter_text(&filter)
        )));
    }
    if let Some(r) = &restrict {
        if !selected.iter().any(|(_, p)| p.agrees_with(r)) {
            return Err(Error::ParamOutOfDomain {
                id: filter_text(&filter),
                params: r.to_string(),
            });
        }
    }
    let results = catalog::verify_all_with(&filter, cfg, Some(tolerance), restrict.as_ref());
    let ok = results.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => catalog::results_json(&results, cfg.target_digits),
        Format::Csv => catalog::results_csv(&results, cfg.target_digits)?,
        Format::Text => catalog::results_text(&results),
    };
    Ok(Output { body, ok })
}

fn filter_text(f: &Filter) -> String {
    match f {
        Filter::All => "*".into(),
        Filter::Glob(g) => g.clone(),
        Filter::Class(c) => format!("class={c}"),
    }
}

/// Parses `a..b`, `a..=b` (both inclusive) or a single value.
fn parse_k_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::parse(0, format!("bad k range `{s}`; expected e.g. 1..6"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo == 0 || hi < lo {
        return Err(Error::domain(format!("k range `{s}` must satisfy 1 <= start <= end")));
    }
    Ok((lo, hi))
}

struct Row {
    k: u32,
    direct: ValueWithError,
    reduced: Float,
    diff: Float,
    pass: bool,
}

fn cmd_table(family: Family, p: u32, k: &str, tolerance: u32, cfg: &PrecisionConfig, format: Format) -> Result<Output> {
    if p > 1 {
        return Err(Error::domain(format!("p must be 0 or 1, got {p}")));
    }
    let (lo, hi) = parse_k_range(k)?;
    let start = Instant::now();
    let limit = pow10(-(tolerance as i32), cfg.bits());
    let rows: Vec<Row> = (lo..=hi)
        .into_par_iter()
        .map(|k| -> Result<Row> {
            let direct = reductions::wbar_direct(&family.orders(), p, k, cfg)?;
            let reduced = reductions::wbar_reduced(family, p, k, cfg)?;
            let diff = Float::with_val(cfg.bits(), &direct.value - &reduced).abs();
            let pass = diff < limit && direct.error_bound < limit;
            Ok(Row {
                k,
                direct,
                reduced,
                diff,
                pass,
            })
        })
        .collect::<Result<_>>()?;
    let millis = start.elapsed().as_millis() as u64;
    let ok = rows.iter().all(|r| r.pass);
    let digits = cfg.target_digits as usize;
    let body = match format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "p": p,
                        "direct": format_sig(&r.direct.value, digits),
                        "reduced": format_sig(&r.reduced, digits),
                        "abs_diff": sci(&r.diff, 3),
                        "error_estimate": sci(&r.direct.error_bound, 3),
                        "pass": r.pass,
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({
                "family": family.to_string(),
                "p": p,
                "digits": cfg.target_digits,
                "tolerance_digits": tolerance,
                "rows": list,
                "timing": { "millis": millis },
            }))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
            w.write_record([
                "family",
                "k",
                "p",
                "direct",
                "reduced",
                "abs_diff",
                "error_estimate",
                "pass",
            ])
            .map_err(io)?;
            for r in &rows {
                w.write_record([
                    family.to_string(),
                    r.k.to_string(),
                    p.to_string(),
                    format_sig(&r.direct.value, digits),
                    format_sig(&r.reduced, digits),
                    sci(&r.diff, 3),
                    sci(&r.direct.error_bound, 3),
                    r.pass.to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("utf-8")
        }
        Format::Text => {
            let mut s = format!("family={family} p={p} digits={}\n", cfg.target_digits);
            for r in &rows {
                s.push_str(&format!(
                    "k={:<3} {}  diff={}{}\n",
                    r.k,
                    format_sig(&r.direct.value, digits),
                    sci(&r.diff, 3),
                    if r.pass { "" } else { "  FAIL" }
                ));
            }
            s
        }
    };
    Ok(Output { body, ok })
}

fn cmd_list(format: Format) -> Result<Output> {
    let records = catalog::registry();
    let body = match format {
        Format::Json => catalog::records_json(&records),
        Format::Csv => catalog::records_csv(&records)?,
        Format::Text => catalog::records_text(&records),
    };
    Ok(Output { body, ok: true })
}
