//! JSON, CSV and text renderings of verification results and of the
//! registry. Wall-clock data sits under a separate `timing` key (JSON) or in
//! the last column (CSV) so outputs can be compared byte for byte once it is
//! masked.

use rug::Float;
use serde_json::{json, Value};

use super::{IdentityRecord, VerificationResult};
use crate::error::{Error, Result};
use crate::numerics::{format_sig, sci};

fn opt_value(v: &Option<Float>, digits: usize) -> Value {
    v.as_ref().map_or(Value::Null, |f| Value::String(format_sig(f, digits)))
}

fn opt_sci(v: &Option<Float>) -> Value {
    v.as_ref().map_or(Value::Null, |f| Value::String(sci(f, 3)))
}

fn result_json(r: &VerificationResult, digits: usize) -> Value {
    json!({
        "id": r.id,
        "params": r.params,
        "lhs": opt_value(&r.lhs_value, digits),
        "rhs": opt_value(&r.rhs_value, digits),
        "abs_diff": opt_sci(&r.abs_diff),
        "error_estimate": opt_sci(&r.lhs_error_estimate),
        "tolerance_digits": r.tolerance_digits,
        "pass": r.pass,
        "method": r.method,
        "reason": r.reason,
        "timing": { "millis": r.millis },
    })
}

/// The full report: summary counts plus one object per result. Values are
/// printed with `digits` significant digits.
pub fn results_json(results: &[VerificationResult], digits: u32) -> String {
    let passed = results.iter().filter(|r| r.pass).count();
    let report = json!({
        "digits": digits,
        "total": results.len(),
        "passed": passed,
        "failed": results.len() - passed,
        "results": results.iter().map(|r| result_json(r, digits as usize)).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&report).expect("reports always serialize");
    s.push('\n');
    s
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt_str(v: &Value) -> String {
    v.as_str().unwrap_or("").to_string()
}

pub fn results_csv(results: &[VerificationResult], digits: u32) -> Result<String> {
    csv_string(|w| {
        w.write_record([
            "id",
            "params",
            "lhs",
            "rhs",
            "abs_diff",
            "error_estimate",
            "tolerance_digits",
            "pass",
            "method",
            "reason",
            "millis",
        ])?;
        for r in results {
            w.write_record([
                r.id.clone(),
                r.params.to_string(),
                opt_str(&opt_value(&r.lhs_value, digits as usize)),
                opt_str(&opt_value(&r.rhs_value, digits as usize)),
                opt_str(&opt_sci(&r.abs_diff)),
                opt_str(&opt_sci(&r.lhs_error_estimate)),
                r.tolerance_digits.to_string(),
                r.pass.to_string(),
                r.method.clone(),
                r.reason.clone().unwrap_or_default(),
                r.millis.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn results_text(results: &[VerificationResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let params = if r.params.is_empty() {
            String::new()
        } else {
            format!(" [{}]", r.params)
        };
        let detail = match (&r.abs_diff, &r.lhs_error_estimate, &r.reason) {
            (Some(d), Some(e), _) => format!("diff={} err={} tol=1e-{}", sci(d, 3), sci(e, 3), r.tolerance_digits),
            (_, _, Some(reason)) => reason.clone(),
            _ => String::new(),
        };
        out.push_str(&format!("{status} {}{params}  {detail}  ({} ms)\n", r.id, r.millis));
    }
    let passed = results.iter().filter(|r| r.pass).count();
    out.push_str(&format!("{passed}/{} passed\n", results.len()));
    out
}

fn record_json(r: &IdentityRecord) -> Value {
    let example = r
        .domain
        .first()
        .and_then(|p| r.lhs_spec(p).ok())
        .map(|s| serde_json::to_value(s).expect("series specs serialize"));
    json!({
        "id": r.id,
        "description": r.description,
        "paper_ref": r.paper_ref,
        "param_domain": r.domain_text,
        "instances": r.domain.len(),
        "default_tolerance_digits": r.default_tolerance_digits,
        "convergence_class": r.convergence_class,
        "external_source": r.external_source,
        "rhs_builder": r.rhs_builder,
        "lhs_example": example,
    })
}

/// The registry as a JSON array.
pub fn records_json(records: &[IdentityRecord]) -> String {
    let list: Vec<Value> = records.iter().map(record_json).collect();
    let mut s = serde_json::to_string_pretty(&list).expect("listings always serialize");
    s.push('\n');
    s
}

pub fn records_csv(records: &[IdentityRecord]) -> Result<String> {
    csv_string(|w| {
        w.write_record([
            "id",
            "description",
            "paper_ref",
            "param_domain",
            "instances",
            "default_tolerance_digits",
            "convergence_class",
            "external_source",
        ])?;
        for r in records {
            w.write_record([
                r.id.to_string(),
                r.description.to_string(),
                r.paper_ref.to_string(),
                r.domain_text.to_string(),
                r.domain.len().to_string(),
                r.default_tolerance_digits.to_string(),
                r.convergence_class.to_string(),
                r.external_source.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn records_text(records: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let ext = if r.external_source { " (external source)" } else { "" };
        out.push_str(&format!(
            "{:<18} {:<16} tol 1e-{:<3} {}{ext}\n{:<18} domain: {}; quote: \"{}\"\n",
            r.id, r.convergence_class, r.default_tolerance_digits, r.description, "", r.domain_text, r.paper_ref
        ));
    }
    out
}
