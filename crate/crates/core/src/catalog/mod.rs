//! The identity registry and the engine that checks each identity by
//! evaluating both sides.

mod params;
mod registry;
mod report;

pub use params::Params;
pub use registry::{registry, X_SAMPLES};
pub use report::{records_csv, records_json, records_text, results_csv, results_json, results_text};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::closedform::{eval_expr_with_error, ConstExpr};
use crate::error::{Error, Result};
use crate::numerics::{pow10, PrecisionConfig};
use crate::reductions::{self, SeriesSpec};

/// How quickly the left-hand side converges; decides default tolerances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceClass {
    /// Geometric series, finite sums and quadrature.
    Fast,
    /// Alternating series handled by acceleration.
    AlternatingSlow,
    /// Positive series with algebraically decaying terms (tail-fitted).
    AlgebraicSlow,
}

impl ConvergenceClass {
    pub const ALL: [ConvergenceClass; 3] = [
        ConvergenceClass::Fast,
        ConvergenceClass::AlternatingSlow,
        ConvergenceClass::AlgebraicSlow,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConvergenceClass::Fast => "fast",
            ConvergenceClass::AlternatingSlow => "alternating_slow",
            ConvergenceClass::AlgebraicSlow => "algebraic_slow",
        }
    }
}

impl fmt::Display for ConvergenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConvergenceClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConvergenceClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown convergence class `{s}`")))
    }
}

/// One verifiable identity: a left-hand side series and a closed-form
/// right-hand side, both parameterized over an explicit instance list.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub description: &'static str,
    /// Short verbatim quote of the displayed formula.
    pub paper_ref: &'static str,
    pub domain: Vec<Params>,
    /// Human-readable summary of `domain`, e.g. `k in 1..6`.
    pub domain_text: &'static str,
    pub default_tolerance_digits: u32,
    pub convergence_class: ConvergenceClass,
    /// The identity is quoted from other work rather than proved here.
    pub external_source: bool,
    /// Name of the right-hand side builder, for listings.
    pub rhs_builder: &'static str,
    pub lhs: fn(&Params) -> Result<SeriesSpec>,
    pub rhs: fn(&Params) -> Result<ConstExpr>,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("domain", &self.domain_text)
            .field("class", &self.convergence_class)
            .finish()
    }
}

impl IdentityRecord {
    pub fn lhs_spec(&self, params: &Params) -> Result<SeriesSpec> {
        (self.lhs)(params)
    }

    pub fn rhs_expr(&self, params: &Params) -> Result<ConstExpr> {
        (self.rhs)(params)
    }

    fn check_params(&self, params: &Params) -> Result<()> {
        if self.domain.contains(params) {
            Ok(())
        } else {
            Err(Error::ParamOutOfDomain {
                id: self.id.to_string(),
                params: params.to_string(),
            })
        }
    }
}

/// The outcome of checking one identity instance.
#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub id: String,
    pub params: Params,
    pub lhs_value: Option<Float>,
    pub rhs_value: Option<Float>,
    pub abs_diff: Option<Float>,
    /// Left-hand side estimate plus the estimates of any series atoms on
    /// the right.
    pub lhs_error_estimate: Option<Float>,
    pub tolerance_digits: u32,
    pub pass: bool,
    pub method: String,
    /// Why the check failed, when it did not produce both values.
    pub reason: Option<String>,
    pub millis: u64,
}

/// Which records `verify_all` runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    /// Shell-style glob over ids, e.g. `thm1.2-*`.
    Glob(String),
    Class(ConvergenceClass),
}

impl Filter {
    pub fn matches(&self, record: &IdentityRecord) -> bool {
        match self {
            Filter::All => true,
            Filter::Class(c) => record.convergence_class == *c,
            Filter::Glob(g) => glob::Pattern::new(g).map(|p| p.matches(record.id)).unwrap_or(false),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;
    /// `""` or `*` selects everything, `class=<name>` a convergence class,
    /// anything else is an id glob.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "*" {
            return Ok(Filter::All);
        }
        if let Some(c) = s.strip_prefix("class=") {
            return Ok(Filter::Class(c.parse()?));
        }
        glob::Pattern::new(s).map_err(|e| Error::parse(e.pos, e.msg))?;
        Ok(Filter::Glob(s.to_string()))
    }
}

pub fn find(id: &str) -> Result<IdentityRecord> {
    registry()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Checks one instance at the record's default tolerance (capped by the
/// target digits of `cfg`).
pub fn verify(id: &str, params: &Params, cfg: &PrecisionConfig) -> Result<VerificationResult> {
    verify_with(id, params, cfg, None)
}

/// As [`verify`], with the tolerance further capped at `tolerance`.
pub fn verify_with(
    id: &str,
    params: &Params,
    cfg: &PrecisionConfig,
    tolerance: Option<u32>,
) -> Result<VerificationResult> {
    let record = find(id)?;
    record.check_params(params)?;
    cfg.validate()?;
    Ok(run(&record, params, cfg, tolerance))
}

fn effective_tolerance(record: &IdentityRecord, cfg: &PrecisionConfig, tolerance: Option<u32>) -> u32 {
    let t = record.default_tolerance_digits.min(cfg.target_digits);
    tolerance.map_or(t, |o| t.min(o))
}

fn run(record: &IdentityRecord, params: &Params, cfg: &PrecisionConfig, tolerance: Option<u32>) -> VerificationResult {
    let tol = effective_tolerance(record, cfg, tolerance);
    // Tail-fitted sums cannot reach high precision; asking for more than a
    // few digits beyond the tolerance only costs time.
    let cfg = match record.convergence_class {
        ConvergenceClass::AlgebraicSlow => cfg.with_target(cfg.target_digits.min(tol + 5)),
        _ => *cfg,
    };
    let start = Instant::now();
    let mut result = VerificationResult {
        id: record.id.to_string(),
        params: params.clone(),
        lhs_value: None,
        rhs_value: None,
        abs_diff: None,
        lhs_error_estimate: None,
        tolerance_digits: tol,
        pass: false,
        method: String::new(),
        reason: None,
        millis: 0,
    };
    let outcome = (|| -> Result<()> {
        let spec = record.lhs_spec(params)?;
        let lhs = reductions::eval_unchecked(&spec, &cfg)?;
        let rhs = eval_expr_with_error(&record.rhs_expr(params)?, &cfg)?;
        let bits = cfg.bits();
        let diff = Float::with_val(bits, &lhs.value - &rhs.value).abs();
        let err = Float::with_val(bits, &lhs.error_bound + &rhs.error_bound);
        let limit = pow10(-(tol as i32), bits);
        result.pass = diff < limit && err < limit;
        result.method = if rhs.method == "closed form" {
            lhs.method
        } else {
            format!("{}; rhs: {}", lhs.method, rhs.method)
        };
        result.lhs_value = Some(lhs.value);
        result.rhs_value = Some(rhs.value);
        result.abs_diff = Some(diff);
        result.lhs_error_estimate = Some(err);
        Ok(())
    })();
    if let Err(e) = outcome {
        result.reason = Some(e.to_string());
    }
    result.millis = start.elapsed().as_millis() as u64;
    result
}

/// Every `(record, params)` instance selected by `filter`, in canonical
/// order (id, then parameters).
pub fn instances(filter: &Filter) -> Vec<(IdentityRecord, Params)> {
    let mut out: Vec<(IdentityRecord, Params)> = registry()
        .into_iter()
        .filter(|r| filter.matches(r))
        .flat_map(|r| r.domain.clone().into_iter().map(move |p| (r.clone(), p)))
        .collect();
    out.sort_by(|a, b| (a.0.id, &a.1).cmp(&(b.0.id, &b.1)));
    out
}

/// Runs every matching instance, in parallel on the current rayon pool.
/// Failures are reported as results; the output order is canonical.
pub fn verify_all(filter: &Filter, cfg: &PrecisionConfig) -> Vec<VerificationResult> {
    verify_all_with(filter, cfg, None, None)
}

/// As [`verify_all`], with an optional tolerance cap and an optional
/// parameter restriction (instances must agree on every given key).
pub fn verify_all_with(
    filter: &Filter,
    cfg: &PrecisionConfig,
    tolerance: Option<u32>,
    restrict: Option<&Params>,
) -> Vec<VerificationResult> {
    let work: Vec<(IdentityRecord, Params)> = instances(filter)
        .into_iter()
        .filter(|(_, p)| restrict.map_or(true, |r| p.agrees_with(r)))
        .collect();
    work.par_iter().map(|(r, p)| run(r, p, cfg, tolerance)).collect()
}

#[cfg(test)]
mod tests;
