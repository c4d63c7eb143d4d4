//! Output assembly. Every command builds one [`Report`], rendered once after
//! all work has finished.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Flat view of the results for CSV and text output.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub pass: bool,
    pub table: Table,
    pub runtime_ms: Option<u128>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    command: &'a str,
    params: &'a Map<String, Value>,
    results: &'a [Value],
    pass: bool,
    runtime_ms: Option<u128>,
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let doc = JsonReport {
                    schema: 1,
                    command: self.command,
                    params: &self.params,
                    results: &self.results,
                    pass: self.pass,
                    runtime_ms: self.runtime_ms,
                };
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.table.headers)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            Format::Text => self.write_text(out),
        }
    }

    fn write_text(&self, out: &mut impl Write) -> std::io::Result<()> {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "{} {}", self.command, params.join(" "))?;
        let t = &self.table;
        let mut widths: Vec<usize> = t.headers.iter().map(|h| h.len()).collect();
        for row in &t.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(t.headers.clone()))?;
        for row in &t.rows {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        writeln!(out, "pass: {}", self.pass)?;
        if let Some(ms) = self.runtime_ms {
            writeln!(out, "runtime: {ms} ms")?;
        }
        Ok(())
    }
}
