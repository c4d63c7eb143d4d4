use std::path::Path;

use fishburn::fishburn::{divisibility_check, scan_congruence, verify_congruence, xi_coefficients};
use fishburn::identities::{
    verify_difference_equation, verify_generalized_slater, verify_key_identity,
    verify_multisum_representation, verify_rewrite2, verify_root_match, verify_slater,
    verify_theta_product, Discrepancy, IdentityReport,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::bfile;
use crate::render::{to_value, Report, Table};
use crate::CliError;

pub const IDENTITIES: [&str; 9] = [
    "difference-equation",
    "multisum",
    "rewrite2",
    "key",
    "theta-product",
    "slater",
    "generalized-slater",
    "root-match",
    "all",
];

/// Outcome of a command before rendering; `runtime_ms` is filled in by the
/// caller.
fn report(
    command: &'static str,
    params: Value,
    results: Vec<Value>,
    pass: bool,
    table: Table,
) -> Report {
    let Value::Object(params) = params else {
        unreachable!("params are built as objects")
    };
    Report {
        command,
        params,
        results,
        pass,
        table,
        runtime_ms: None,
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

pub fn xi(t: u32, count: usize) -> Result<Report, CliError> {
    let values = xi_coefficients(t, count)?;
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    let results = rows
        .iter()
        .map(|r| json!({"n": r[0].parse::<u64>().unwrap(), "value": r[1]}));
    Ok(report(
        "xi",
        json!({"t": t, "count": count}),
        results.collect(),
        true,
        Table {
            headers: vec!["n", "value"],
            rows,
        },
    ))
}

pub fn congruence(t: u32, p: u64, r: u32, m_max: u64, scan_j: &[u64]) -> Result<Report, CliError> {
    let experiment = !scan_j.is_empty();
    let rep = if experiment {
        scan_congruence(t, p, r, m_max, scan_j)?
    } else {
        verify_congruence(t, p, r, m_max)?
    };
    let rows = rep
        .entries
        .iter()
        .map(|e| {
            vec![
                e.m.to_string(),
                e.j.to_string(),
                e.index.to_string(),
                e.residue.to_string(),
                e.value.clone(),
            ]
        })
        .collect();
    let mut params = json!({"t": t, "p": p, "r": r, "m_max": m_max});
    if experiment {
        params["scan_j"] = json!(scan_j);
    }
    // a scan outside the hypothesis carries no claim
    let pass = experiment || rep.pass;
    Ok(report(
        "congruence",
        params,
        vec![to_value(&rep)],
        pass,
        Table {
            headers: vec!["m", "j", "index", "residue", "value"],
            rows,
        },
    ))
}

/// Windows used when only `--order` is given.
#[derive(Clone, Copy, Debug)]
pub struct VerifyWindow {
    pub order: i64,
    pub x_bound: usize,
    pub n_max: u64,
}

fn run_identity(name: &str, t: u32, w: VerifyWindow) -> fishburn::Result<IdentityReport> {
    match name {
        "difference-equation" => verify_difference_equation(t, w.x_bound, w.order),
        "multisum" => verify_multisum_representation(t, w.x_bound, w.order),
        "rewrite2" => verify_rewrite2(t, w.x_bound, w.order),
        "key" => verify_key_identity(t, w.order),
        "theta-product" => verify_theta_product(t, w.order),
        "slater" => verify_slater(w.order),
        "generalized-slater" => verify_generalized_slater(t, w.order),
        "root-match" => verify_root_match(t, w.n_max),
        other => unreachable!("identity {other:?} is rejected by the parser"),
    }
}

fn describe(d: &Option<Discrepancy>) -> String {
    match d {
        None => String::new(),
        Some(d) => {
            let at = match d.x_degree {
                Some(x) => format!("x^{x} q^{}", d.exponent),
                None => format!("[{}]", d.exponent),
            };
            format!("{}: {at}: {} vs {}", d.part, d.lhs, d.rhs)
        }
    }
}

pub fn verify(identity: &str, t: u32, w: VerifyWindow) -> Result<Report, CliError> {
    let names: Vec<&str> = if identity == "all" {
        IDENTITIES[..8]
            .iter()
            .copied()
            .filter(|n| t >= 2 || matches!(*n, "slater" | "root-match"))
            .collect()
    } else {
        vec![identity]
    };
    let reports = names
        .par_iter()
        .map(|n| run_identity(n, t, w))
        .collect::<fishburn::Result<Vec<_>>>()?;
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.t.map(|t| t.to_string()).unwrap_or_default(),
                r.pass.to_string(),
                describe(&r.first_discrepancy),
            ]
        })
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    Ok(report(
        "verify",
        json!({"identity": identity, "t": t, "order": w.order, "x_bound": w.x_bound, "n_max": w.n_max}),
        reports.iter().map(to_value).collect(),
        pass,
        Table {
            headers: vec!["identity", "t", "pass", "first_discrepancy"],
            rows,
        },
    ))
}

pub fn bfile_check(path: &Path, count: usize) -> Result<Report, CliError> {
    let entries = bfile::read(path)?;
    let covered = entries
        .iter()
        .take_while(|e| e.index < count as u64)
        .enumerate()
        .take_while(|(k, e)| e.index == *k as u64)
        .count();
    if covered < count {
        return Err(CliError::Usage(format!(
            "insufficient data: {} holds indices 0..{covered} contiguously, {count} requested",
            path.display()
        )));
    }
    let computed = xi_coefficients(1, count)?;
    let mut first_mismatch = Value::Null;
    let mut rows = Vec::with_capacity(count);
    for (e, c) in entries.iter().zip(&computed) {
        let ok = &e.value == c;
        if !ok && first_mismatch.is_null() {
            first_mismatch =
                json!({"index": e.index, "file": e.value.to_string(), "computed": c.to_string()});
        }
        rows.push(vec![
            e.index.to_string(),
            e.value.to_string(),
            c.to_string(),
            ok.to_string(),
        ]);
    }
    let pass = first_mismatch.is_null();
    let result = json!({"checked": count, "first_mismatch": first_mismatch});
    Ok(report(
        "bfile-check",
        json!({"path": path.display().to_string(), "count": count}),
        vec![result],
        pass,
        Table {
            headers: vec!["index", "file", "computed", "match"],
            rows,
        },
    ))
}

pub fn divisibility(t: u32, s: u64, n: u64) -> Result<Report, CliError> {
    let rep = divisibility_check(t, s, n)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    let rows = rep
        .pieces
        .iter()
        .map(|v| {
            vec![
                v.i.to_string(),
                v.in_s_set.to_string(),
                opt(v.divides.map(|d| d.to_string())),
                opt(v.shift.map(|d| d.to_string())),
                opt(v.quotient_degree.map(|d| d.to_string())),
                v.terms.to_string(),
            ]
        })
        .collect();
    let mut result = object(to_value(&rep));
    result.remove("pass");
    Ok(report(
        "divisibility",
        json!({"t": t, "s": s, "n": n}),
        vec![Value::Object(result)],
        rep.pass,
        Table {
            headers: vec![
                "i",
                "in_s_set",
                "divides",
                "shift",
                "quotient_degree",
                "terms",
            ],
            rows,
        },
    ))
}
