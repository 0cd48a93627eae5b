//! Deterministic text and JSON rendering of command results.

use std::collections::BTreeMap;

use clap::ValueEnum;
use hopfgal_core::report::{Report, Status};
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    #[value(alias = "table")]
    Text,
    Json,
}

/// A matrix emitted alongside a report, with its row and column bases.
#[derive(Clone, Debug, Serialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub row_basis: Vec<String>,
    pub col_basis: Vec<String>,
    pub entries: Vec<(usize, usize, String)>,
}

/// Everything a `check`, `phi` or `bundle` run prints.
#[derive(Clone, Debug)]
pub struct Output {
    pub command: String,
    pub report: Report,
    pub matrices: Vec<NamedMatrix>,
}

#[derive(Serialize)]
struct JsonVerdict<'a> {
    name: &'a str,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    command: &'a str,
    verdicts: Vec<JsonVerdict<'a>>,
    dims: &'a BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "<[NamedMatrix]>::is_empty")]
    matrices: &'a [NamedMatrix],
    overall: String,
}

pub fn exit_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Undecided => 3,
    }
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => self.json(),
        }
    }

    fn json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.json_doc()).expect("report serializes");
        out.push('\n');
        out
    }

    /// Single-line JSON, for embedding in other documents.
    pub fn compact_json(&self) -> String {
        serde_json::to_string(&self.json_doc()).expect("report serializes")
    }

    fn json_doc(&self) -> JsonOutput<'_> {
        JsonOutput {
            command: &self.command,
            verdicts: self
                .report
                .verdicts
                .iter()
                .map(|v| JsonVerdict {
                    name: &v.name,
                    status: v.status.to_string(),
                    witness: v.witness.as_deref(),
                })
                .collect(),
            dims: &self.report.dims,
            matrices: &self.matrices,
            overall: self.report.overall().to_string(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let width = self
            .report
            .verdicts
            .iter()
            .map(|v| v.name.chars().count())
            .max()
            .unwrap_or(0);
        for v in &self.report.verdicts {
            let pad = width - v.name.chars().count();
            out += &format!("  {}{}  {}", v.name, " ".repeat(pad), v.status);
            if let Some(w) = &v.witness {
                out += &format!("  {w}");
            }
            out.push('\n');
        }
        if !self.report.dims.is_empty() {
            out += "dims\n";
            for (k, d) in &self.report.dims {
                out += &format!("  {k} = {d}\n");
            }
        }
        for m in &self.matrices {
            out += &format!("matrix {} ({}x{})\n", m.name, m.rows, m.cols);
            out += &format!("  rows: {}\n", m.row_basis.join(", "));
            out += &format!("  cols: {}\n", m.col_basis.join(", "));
            for (r, c, v) in &m.entries {
                out += &format!("  [{r}, {c}, \"{v}\"]\n");
            }
        }
        out += &format!("overall: {}\n", self.report.overall());
        out
    }
}
