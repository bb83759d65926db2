//! CSV and JSON renderings of command results. Output is a pure function of
//! the results, so identical inputs give byte-identical text.

use std::fmt::Write as _;

use serde::Serialize;

use super::commands::{ReproduceReport, SolveOutput, VerifyOutput};
use super::config::Format;

pub const CSV_HEADER: &str = "k,x,y,residual_PL,residual_Pi,jacobian_det,simple,verified,closure_residual";

/// One table row; verification columns are empty for `solve`.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionRow {
    pub k: usize,
    pub x: f64,
    pub y: f64,
    #[serde(rename = "residual_PL")]
    pub residual_pl: f64,
    #[serde(rename = "residual_Pi")]
    pub residual_pi: f64,
    pub jacobian_det: f64,
    pub simple: bool,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_drift_saddle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_drift_center: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region_violation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation_consistent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

pub fn solve_rows(out: &SolveOutput) -> Vec<SolutionRow> {
    out.solutions
        .iter()
        .enumerate()
        .map(|(i, s)| SolutionRow {
            k: i + 1,
            x: s.x,
            y: s.y,
            residual_pl: s.residual_pl,
            residual_pi: s.residual_pi,
            jacobian_det: s.jacobian_det,
            simple: s.simple,
            multiplicity: s.multiplicity,
            verified: None,
            closure_residual: None,
            h_drift_saddle: None,
            h_drift_center: None,
            region_violation: None,
            orientation_consistent: None,
            diagnostic: None,
        })
        .collect()
}

pub fn verify_rows(out: &VerifyOutput) -> Vec<SolutionRow> {
    solve_rows(&out.solve)
        .into_iter()
        .zip(&out.verifications)
        .map(|(mut row, v)| {
            row.verified = Some(v.verified);
            row.closure_residual = Some(v.closure_residual);
            row.h_drift_saddle = v.saddle.as_ref().map(|a| a.h_drift);
            row.h_drift_center = v.center.as_ref().map(|a| a.h_drift);
            row.region_violation = Some(v.region_violation);
            row.orientation_consistent = Some(v.orientation_consistent);
            row.diagnostic = v.diagnostic.clone();
            row
        })
        .collect()
}

/// Shortest round-trip text, switching to exponent form for tiny or huge
/// magnitudes.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 fields")
}

/// CSV with the fixed leading columns; verify tables append the per-arc
/// first-integral drift.
pub fn rows_csv(rows: &[SolutionRow], with_drift: bool) -> String {
    let mut header: Vec<&str> = CSV_HEADER.split(',').collect();
    if with_drift {
        header.extend(["h_drift_saddle", "h_drift_center"]);
    }
    csv_text(
        &header,
        rows.iter().map(|r| {
            let mut rec = vec![
                r.k.to_string(),
                num(r.x),
                num(r.y),
                num(r.residual_pl),
                num(r.residual_pi),
                num(r.jacobian_det),
                r.simple.to_string(),
                opt_bool(r.verified),
                opt_num(r.closure_residual),
            ];
            if with_drift {
                rec.extend([opt_num(r.h_drift_saddle), opt_num(r.h_drift_center)]);
            }
            rec
        }),
    )
}

#[derive(Serialize)]
struct SolveDoc<'a> {
    example: &'a str,
    resultant_degree: usize,
    y_max: f64,
    solutions: Vec<SolutionRow>,
    boundary: &'a [(f64, f64)],
}

pub fn render_solve(out: &SolveOutput, format: Format) -> String {
    match format {
        Format::Csv => rows_csv(&solve_rows(out), false),
        Format::Json => json(&SolveDoc {
            example: &out.label,
            resultant_degree: out.resultant_degree,
            y_max: out.y_max,
            solutions: solve_rows(out),
            boundary: &out.boundary,
        }),
    }
}

pub fn render_verify(out: &VerifyOutput, format: Format) -> String {
    match format {
        Format::Csv => rows_csv(&verify_rows(out), true),
        Format::Json => json(&SolveDoc {
            example: &out.solve.label,
            resultant_degree: out.solve.resultant_degree,
            y_max: out.solve.y_max,
            solutions: verify_rows(out),
            boundary: &out.solve.boundary,
        }),
    }
}

pub fn render_reproduce(r: &ReproduceReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_text(
            &["id", "admissible_count", "resultant_degree", "bound_ok", "max_deviation", "matched", "verified", "nested"],
            r.examples.iter().map(|e| {
                vec![
                    e.id.clone(),
                    e.admissible_count.to_string(),
                    e.resultant_degree.to_string(),
                    e.bound_ok.to_string(),
                    opt_num(e.max_deviation),
                    e.matched.to_string(),
                    e.verified.to_string(),
                    e.nested.to_string(),
                ]
            }),
        ),
    }
}

/// Human-readable summary including runtimes.
pub fn reproduce_table(r: &ReproduceReport) -> String {
    let mut s = format!(
        "{:<5} {:>5} {:>4} {:>6} {:>10} {:>8} {:>6} {:>9}\n",
        "id", "count", "deg", "bound", "max dev", "verified", "nested", "time"
    );
    for e in &r.examples {
        let dev = e.max_deviation.map_or("-".to_string(), |d| format!("{d:.2e}"));
        let _ = writeln!(
            s,
            "{:<5} {:>5} {:>4} {:>6} {:>10} {:>6}/{} {:>6} {:>7.1}ms",
            e.id,
            e.admissible_count,
            e.resultant_degree,
            if e.bound_ok { "ok" } else { "FAIL" },
            dev,
            e.verified,
            e.admissible_count,
            if e.nested { "yes" } else { "no" },
            e.runtime.as_secs_f64() * 1e3
        );
    }
    let _ = writeln!(
        s,
        "{} examples, {}/{} pairs matched, {}/{} verified, {:.2}s total",
        r.examples.len(),
        r.matched,
        r.total_pairs,
        r.verified,
        r.total_pairs,
        r.runtime.as_secs_f64()
    );
    s
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}
