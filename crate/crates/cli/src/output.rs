use std::io::{self, Write};

use serde::Serialize;
use wilson4::verifier::{CongruenceReport, Summary};

use crate::args::Format;

/// One line of jsonl or csv output.
#[derive(Debug, Serialize)]
pub struct OutputRecord<'a> {
    pub id: &'a str,
    pub p: Option<u64>,
    pub e: Option<u32>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub pass: bool,
    pub status: String,
    pub cases: usize,
    pub witness: Option<&'a str>,
    pub note: Option<&'a str>,
    pub ms: f64,
    pub version: &'static str,
    pub timestamp: u64,
}

impl<'a> OutputRecord<'a> {
    pub fn new(r: &'a CongruenceReport, timestamp: u64) -> Self {
        OutputRecord {
            id: &r.id,
            p: r.p,
            e: r.e,
            lhs: r.lhs.as_ref().map(ToString::to_string),
            rhs: r.rhs.as_ref().map(ToString::to_string),
            pass: r.pass(),
            status: r.status.to_string().to_lowercase(),
            cases: r.cases,
            witness: r.witness.as_deref(),
            note: r.note.as_deref(),
            ms: (r.ms * 1000.0).round() / 1000.0,
            version: env!("CARGO_PKG_VERSION"),
            timestamp,
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn summary_line(s: &Summary) -> String {
    format!("{} passed, {} failed, {} skipped", s.passed(), s.failed(), s.skipped())
}

pub fn write_reports(out: &mut impl Write, summary: &Summary, format: Format, timestamp: u64) -> io::Result<()> {
    match format {
        Format::Table => write_table(out, summary),
        Format::Jsonl => {
            for r in &summary.reports {
                serde_json::to_writer(&mut *out, &OutputRecord::new(r, timestamp))?;
                writeln!(out)?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &summary.reports {
                w.serialize(OutputRecord::new(r, timestamp)).map_err(io::Error::other)?;
            }
            w.flush()
        }
    }
}

fn write_table(out: &mut impl Write, summary: &Summary) -> io::Result<()> {
    let rows: Vec<[String; 8]> = summary
        .reports
        .iter()
        .map(|r| {
            let detail = match (&r.witness, &r.note) {
                (Some(w), Some(n)) => format!("{w}; {n}"),
                (Some(w), None) => w.clone(),
                (None, Some(n)) => n.clone(),
                (None, None) => String::new(),
            };
            [
                r.id.clone(),
                opt(r.p),
                opt(r.e),
                r.status.to_string(),
                opt(r.lhs.as_ref()),
                opt(r.rhs.as_ref()),
                format!("{:.2}", r.ms),
                detail,
            ]
        })
        .collect();
    let header = ["check", "p", "e", "status", "lhs", "rhs", "ms", "detail"].map(String::from);
    let mut width = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len().min(40));
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else if (1..=2).contains(&i) || (4..=6).contains(&i) {
                line.push_str(&format!("{cell:>w$}  ", w = width[i]));
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = width[i]));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    writeln!(out, "{}", summary_line(summary))
}
