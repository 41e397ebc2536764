use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "pretty" => Ok(Format::Pretty),
            other => Err(Error::InvalidInput(format!("unknown format {other:?} (csv, json, pretty)"))),
        }
    }
}

/// A rendered table: every cell is already a string, `None` is an empty field.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub digits: u32,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Option<String>>>,
    /// Extra scalar results, e.g. fitted coefficients.
    pub summary: Vec<(&'static str, String)>,
    /// Notes on published values that disagree with recomputation.
    pub footnotes: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json_string()),
            Format::Pretty => Ok(self.to_pretty()),
        }
    }

    /// Rows, then an optional `quantity,value` block after a blank line.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = write_csv(&self.columns, self.rows.iter().map(|r| {
            r.iter().map(|c| c.as_deref().unwrap_or("")).collect::<Vec<_>>()
        }))?;
        if !self.summary.is_empty() {
            out.push('\n');
            out.push_str(&write_csv(
                &["quantity", "value"],
                self.summary.iter().map(|(k, v)| vec![*k, v.as_str()]),
            )?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.clone().map_or(Value::Null, Value::String)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = json!({
            "command": self.command,
            "config": self.config,
            "rows": rows,
            "provenance": {
                "digits": self.digits,
                "versions": { "oddzeta": env!("CARGO_PKG_VERSION") },
            },
        });
        if !self.summary.is_empty() {
            let summary: Map<String, Value> =
                self.summary.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect();
            doc["summary"] = Value::Object(summary);
        }
        if !self.footnotes.is_empty() {
            doc["footnotes"] = json!(self.footnotes);
        }
        doc
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON");
        s.push('\n');
        s
    }

    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<&str>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.as_deref().unwrap_or("")).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, h)| cells.iter().map(|r| r[i].chars().count()).chain([h.len()]).max().unwrap())
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, fields: &[&str]| {
            let padded: Vec<String> =
                fields.iter().zip(&widths).map(|(f, w)| format!("{f:>w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&mut out, &self.columns);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&mut out, &rule.iter().map(String::as_str).collect::<Vec<_>>());
        for row in &cells {
            line(&mut out, row);
        }
        if !self.summary.is_empty() {
            out.push('\n');
            let w = self.summary.iter().map(|(k, _)| k.len()).max().unwrap();
            for (k, v) in &self.summary {
                let _ = writeln!(out, "{k:<w$}  {v}");
            }
        }
        for (i, note) in self.footnotes.iter().enumerate() {
            if i == 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "[{}] {note}", i + 1);
        }
        out
    }
}

fn write_csv<'a, I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = &'a str>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidInput(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
