//! Aligned text output.

use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::{json, Value};

use spinfactor::affine::AffineCharacter;
use spinfactor::charalg::bigint_json;
use spinfactor::report::Report;
use spinfactor::suite::CriterionResult;
use spinfactor::{FormalCharacter, RootSystem, Weight};

fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (a, b) in rows {
        let _ = writeln!(s, "{a:<width$}  {b}");
    }
    s
}

pub fn character(chi: &FormalCharacter) -> String {
    let rows: Vec<(String, String)> = chi
        .sorted_terms()
        .into_iter()
        .map(|(w, c)| (w.to_string(), c.to_string()))
        .collect();
    table(&rows)
}

pub fn affine(a: &AffineCharacter) -> String {
    let mut s = String::new();
    for (m, slice) in a.slices.iter().rev() {
        let _ = writeln!(s, "delta {m}");
        for line in character(slice).lines() {
            let _ = writeln!(s, "  {line}");
        }
    }
    s
}

pub fn parts(parts: &[(Weight, BigInt)]) -> String {
    let rows: Vec<(String, String)> = parts
        .iter()
        .map(|(w, m)| (format!("V{w}"), m.to_string()))
        .collect();
    table(&rows)
}

pub fn parts_json(parts: &[(Weight, BigInt)]) -> Value {
    Value::Array(parts.iter().map(|(w, m)| json!([w, bigint_json(m)])).collect())
}

pub fn roots(rs: &RootSystem) -> String {
    let mut rows = vec![
        ("type".to_string(), rs.name().to_string()),
        ("rank".into(), rs.rank().to_string()),
        ("rho".into(), rs.rho().to_string()),
        ("rho_s".into(), rs.rho_s().to_string()),
        ("theta".into(), rs.theta().to_string()),
        ("theta_s".into(), rs.theta_s().to_string()),
        ("h".into(), rs.coxeter_number().to_string()),
        ("h_vee".into(), rs.dual_coxeter_number().to_string()),
        ("|W|".into(), rs.weyl_group_order().to_string()),
    ];
    for (i, (w, c)) in rs.positive_roots().iter().zip(rs.positive_root_coords()).enumerate() {
        let alpha: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        let tag = if rs.is_short_root(i) && !rs.is_simply_laced() { " short" } else { "" };
        rows.push((format!("root {}", i + 1), format!("{w}  alpha ({}){tag}", alpha.join(","))));
    }
    table(&rows)
}

fn report_rows(r: &Report, indent: &str, rows: &mut Vec<(String, String)>) {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    rows.push((format!("{indent}{}", r.identity), verdict.to_string()));
    if let Some(d) = &r.first_diff {
        rows.push((format!("{indent}  first_diff"), d.to_string()));
    }
    for f in &r.factors {
        let shape = if f.symmetric_unimodal { "symmetric unimodal" } else { "not symmetric unimodal" };
        rows.push((format!("{indent}  factor"), format!("{}  [{shape}]", f.poly)));
    }
    for (k, v) in &r.details {
        if let (Some(id), Some(pass)) = (v.get("identity"), v.get("pass")) {
            let verdict = if pass.as_bool() == Some(true) { "PASS" } else { "FAIL" };
            rows.push((format!("{indent}  {k}: {}", id.as_str().unwrap_or("")), verdict.to_string()));
        }
    }
}

pub fn report(r: &Report) -> String {
    let mut rows = Vec::new();
    report_rows(r, "", &mut rows);
    rows.push(("lhs_hash".into(), r.lhs_hash.clone()));
    rows.push(("rhs_hash".into(), r.rhs_hash.clone()));
    table(&rows)
}

pub fn suite(results: &[CriterionResult]) -> String {
    let rows: Vec<(String, String)> = results
        .iter()
        .map(|r| {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let mut tail = format!("{verdict}  {} cases", r.cases);
            for f in &r.failures {
                let _ = write!(tail, "\n    {f}");
            }
            (format!("{:>2}  {}", r.id, r.title), tail)
        })
        .collect();
    table(&rows)
}
